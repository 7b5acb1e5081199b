//! Grid descriptions, periodic coordinates and flip-flop shift resolution.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::lattice::{Lattice, LatticeRegistry};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Rectangular,
    Triangular,
    Honeycomb,
}

impl Topology {
    pub const ALL: [Topology; 3] = [
        Topology::Rectangular,
        Topology::Triangular,
        Topology::Honeycomb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Topology::Rectangular => "rectangular",
            Topology::Triangular => "triangular",
            Topology::Honeycomb => "honeycomb",
        }
    }

    /// The registered strategy for this topology.
    pub fn lattice(self) -> &'static dyn Lattice {
        LatticeRegistry::global()
            .get(self.name())
            .expect("built-in lattice missing from registry")
    }

    pub fn degree(self) -> usize {
        self.lattice().degree()
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LatticeRegistry::global()
            .get(s)
            .map(|l| l.topology())
            .ok_or_else(|| Error::UnknownTopology(s.to_string()))
    }
}

/// Vertex class. Only the honeycomb lattice has B vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexType {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexCoord {
    pub x: usize,
    pub y: usize,
}

impl VertexCoord {
    pub const fn new(x: usize, y: usize) -> Self {
        VertexCoord { x, y }
    }
}

impl fmt::Display for VertexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// Coin register index. For a lattice of degree `d`, slots `0..d` are
/// directions and slot `d` is the self-loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoinSlot(pub usize);

impl CoinSlot {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Lattice type plus periodic dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub topology: Topology,
    pub width: usize,
    pub height: usize,
}

impl GridSpec {
    /// Builds and validates a grid.
    pub fn new(topology: Topology, width: usize, height: usize) -> Result<Self, Error> {
        let spec = GridSpec {
            topology,
            width,
            height,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn square(topology: Topology, side: usize) -> Result<Self, Error> {
        Self::new(topology, side, side)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.width < 2 || self.height < 2 {
            return Err(Error::InvalidGrid(format!(
                "grid dimensions must be at least 2x2, got {}x{}",
                self.width, self.height
            )));
        }
        if self.lattice().requires_even_dimensions()
            && (!self.width.is_multiple_of(2) || !self.height.is_multiple_of(2))
        {
            return Err(Error::InvalidGrid(format!(
                "{} requires even dimensions, got {}x{}",
                self.topology, self.width, self.height
            )));
        }
        Ok(())
    }

    pub fn lattice(&self) -> &'static dyn Lattice {
        self.topology.lattice()
    }

    pub fn degree(&self) -> usize {
        self.topology.degree()
    }

    /// Coin slots per vertex, including the self-loop.
    pub fn slots(&self) -> usize {
        self.degree() + 1
    }

    pub fn loop_slot(&self) -> CoinSlot {
        CoinSlot(self.degree())
    }

    pub fn vertex_count(&self) -> usize {
        self.width * self.height
    }

    /// Row-major vertex index.
    pub fn vertex_index(&self, v: VertexCoord) -> usize {
        v.y * self.width + v.x
    }

    pub fn vertex_at(&self, index: usize) -> VertexCoord {
        VertexCoord::new(index % self.width, index / self.width)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexCoord> + '_ {
        (0..self.vertex_count()).map(|i| self.vertex_at(i))
    }

    pub fn contains(&self, v: VertexCoord) -> bool {
        v.x < self.width && v.y < self.height
    }

    /// Reduces signed coordinates onto the torus.
    pub fn wrap(&self, x: i64, y: i64) -> VertexCoord {
        VertexCoord::new(
            x.rem_euclid(self.width as i64) as usize,
            y.rem_euclid(self.height as i64) as usize,
        )
    }

    pub fn vertex_type(&self, v: VertexCoord) -> VertexType {
        self.lattice().vertex_type(v.x, v.y)
    }

    /// Where the flip-flop shift sends `(v, slot)`.
    pub fn resolve_shift(
        &self,
        v: VertexCoord,
        slot: CoinSlot,
    ) -> Result<(VertexCoord, CoinSlot), Error> {
        let d = self.degree();
        if slot.0 > d {
            return Err(Error::InvalidSlot {
                slot: slot.0,
                degree: d,
            });
        }
        if !self.contains(v) {
            return Err(Error::OutOfGrid(v));
        }
        if slot.0 == d {
            return Ok((v, slot));
        }
        let m = self.lattice().step(v.x, v.y, slot.0);
        Ok((
            self.wrap(v.x as i64 + m.dx, v.y as i64 + m.dy),
            CoinSlot(m.slot),
        ))
    }

    /// Flat `(vertex, slot)` permutation of the shift: entry `i` is the
    /// index that amplitude `i` moves to. Loop slots map to themselves.
    pub fn shift_table(&self) -> Vec<usize> {
        let slots = self.slots();
        let mut table = Vec::with_capacity(self.vertex_count() * slots);
        for v in self.vertices() {
            for s in 0..slots {
                let (w, t) = self
                    .resolve_shift(v, CoinSlot(s))
                    .expect("in-range slot on in-grid vertex");
                table.push(self.vertex_index(w) * slots + t.0);
            }
        }
        table
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}x{}", self.topology, self.width, self.height)
    }
}
