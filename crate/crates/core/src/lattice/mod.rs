//! Lattice strategies.
//!
//! Each supported grid lives behind the [`Lattice`] trait and is registered by
//! name in [`LatticeRegistry`]. The engine and the dense verifier only talk to
//! the trait, so a new lattice is a new impl plus one registry entry.

mod honeycomb;
mod rectangular;
mod registry;
mod triangular;

pub use honeycomb::Honeycomb;
pub use rectangular::Rectangular;
pub use registry::LatticeRegistry;
pub use triangular::Triangular;

use crate::topology::{Topology, VertexType};

/// A flip-flop move: displacement of the walker and the coin slot it lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Move {
    pub dx: i64,
    pub dy: i64,
    pub slot: usize,
}

impl Move {
    pub const fn new(dx: i64, dy: i64, slot: usize) -> Self {
        Move { dx, dy, slot }
    }
}

/// Periodic 2D lattice with a flip-flop shift.
///
/// Direction slots are numbered `0..degree()`. The self-loop slot (index
/// `degree()`) is handled by the caller and never reaches [`Lattice::step`].
pub trait Lattice: Send + Sync {
    fn topology(&self) -> Topology;

    fn degree(&self) -> usize;

    /// Human-readable label for each direction slot, in slot order.
    fn slot_labels(&self) -> &'static [&'static str];

    /// Whether both grid dimensions must be even for the shift to be well defined.
    fn requires_even_dimensions(&self) -> bool {
        false
    }

    fn vertex_type(&self, _x: usize, _y: usize) -> VertexType {
        VertexType::A
    }

    /// Move taken by direction `slot` at vertex `(x, y)`. `slot < degree()`.
    fn step(&self, x: usize, y: usize, slot: usize) -> Move;
}

impl std::fmt::Debug for dyn Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("topology", &self.topology())
            .field("degree", &self.degree())
            .finish()
    }
}
