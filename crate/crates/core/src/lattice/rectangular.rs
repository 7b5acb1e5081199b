use super::{Lattice, Move};
use crate::topology::Topology;

const UP: usize = 0;
const DOWN: usize = 1;
const LEFT: usize = 2;
const RIGHT: usize = 3;

/// Square lattice, degree 4. Slot order: up, down, left, right.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rectangular;

impl Lattice for Rectangular {
    fn topology(&self) -> Topology {
        Topology::Rectangular
    }

    fn degree(&self) -> usize {
        4
    }

    fn slot_labels(&self) -> &'static [&'static str] {
        &["↑", "↓", "←", "→"]
    }

    fn step(&self, _x: usize, _y: usize, slot: usize) -> Move {
        match slot {
            UP => Move::new(0, 1, DOWN),
            DOWN => Move::new(0, -1, UP),
            LEFT => Move::new(-1, 0, RIGHT),
            RIGHT => Move::new(1, 0, LEFT),
            _ => unreachable!("rectangular direction slot {slot} out of range"),
        }
    }
}
