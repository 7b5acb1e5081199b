use super::{Lattice, Move};
use crate::topology::{Topology, VertexType};

const HORIZONTAL: usize = 0;
const RISING: usize = 1;
const FALLING: usize = 2;

/// Honeycomb lattice in brick-wall coordinates, degree 3.
///
/// Vertices split into two classes by the parity of `x + y` (even = A). An A
/// vertex owns the concrete directions → ↖ ↙ and a B vertex owns ← ↘ ↗, so a
/// three-slot coin suffices: slot 0 (↔) is the horizontal edge, slot 1 (⤢)
/// and slot 2 (⤡) the two slanted ones. The abstract label survives the
/// shift; only the position and the vertex class change.
#[derive(Clone, Copy, Debug, Default)]
pub struct Honeycomb;

impl Lattice for Honeycomb {
    fn topology(&self) -> Topology {
        Topology::Honeycomb
    }

    fn degree(&self) -> usize {
        3
    }

    fn slot_labels(&self) -> &'static [&'static str] {
        &["↔", "⤢", "⤡"]
    }

    fn requires_even_dimensions(&self) -> bool {
        true
    }

    fn vertex_type(&self, x: usize, y: usize) -> VertexType {
        if (x + y).is_multiple_of(2) {
            VertexType::A
        } else {
            VertexType::B
        }
    }

    fn step(&self, x: usize, y: usize, slot: usize) -> Move {
        let a = self.vertex_type(x, y) == VertexType::A;
        match (slot, a) {
            (HORIZONTAL, true) => Move::new(1, 0, HORIZONTAL),
            (HORIZONTAL, false) => Move::new(-1, 0, HORIZONTAL),
            (FALLING, true) => Move::new(0, 1, FALLING),
            (FALLING, false) => Move::new(0, -1, FALLING),
            (RISING, true) => Move::new(0, -1, RISING),
            (RISING, false) => Move::new(0, 1, RISING),
            _ => unreachable!("honeycomb direction slot {slot} out of range"),
        }
    }
}
