use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::{Honeycomb, Lattice, Rectangular, Triangular};

/// Name-keyed table of lattice strategies.
pub struct LatticeRegistry {
    entries: BTreeMap<&'static str, Box<dyn Lattice>>,
}

impl LatticeRegistry {
    pub fn empty() -> Self {
        LatticeRegistry {
            entries: BTreeMap::new(),
        }
    }

    /// Registry holding the three built-in lattices.
    pub fn with_builtins() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(Rectangular));
        registry.register(Box::new(Triangular));
        registry.register(Box::new(Honeycomb));
        registry
    }

    /// Process-wide registry of the built-in lattices.
    pub fn global() -> &'static LatticeRegistry {
        static GLOBAL: OnceLock<LatticeRegistry> = OnceLock::new();
        GLOBAL.get_or_init(Self::with_builtins)
    }

    /// Registers `lattice` under its topology name, replacing any previous entry.
    pub fn register(&mut self, lattice: Box<dyn Lattice>) -> Option<Box<dyn Lattice>> {
        self.entries.insert(lattice.topology().name(), lattice)
    }

    pub fn get(&self, name: &str) -> Option<&dyn Lattice> {
        self.entries.get(name).map(|l| l.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
