use super::{Lattice, Move};
use crate::topology::Topology;

const NW: usize = 0;
const NE: usize = 1;
const W: usize = 2;
const E: usize = 3;
const SW: usize = 4;
const SE: usize = 5;

/// Triangular lattice drawn on square coordinates with one diagonal pair
/// (north-west / south-east) added, degree 6.
///
/// Slot order: ↖ ↗ ← → ↙ ↘. The ↗/↙ pair moves purely along y because the
/// sheared embedding folds that diagonal onto the vertical axis.
#[derive(Clone, Copy, Debug, Default)]
pub struct Triangular;

impl Lattice for Triangular {
    fn topology(&self) -> Topology {
        Topology::Triangular
    }

    fn degree(&self) -> usize {
        6
    }

    fn slot_labels(&self) -> &'static [&'static str] {
        &["↖", "↗", "←", "→", "↙", "↘"]
    }

    fn step(&self, _x: usize, _y: usize, slot: usize) -> Move {
        match slot {
            NW => Move::new(-1, 1, SE),
            SE => Move::new(1, -1, NW),
            W => Move::new(-1, 0, E),
            E => Move::new(1, 0, W),
            SW => Move::new(0, -1, NE),
            NE => Move::new(0, 1, SW),
            _ => unreachable!("triangular direction slot {slot} out of range"),
        }
    }
}
