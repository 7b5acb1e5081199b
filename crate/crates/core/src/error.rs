use thiserror::Error;

use crate::topology::VertexCoord;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown topology {0:?} (expected rectangular, triangular or honeycomb)")]
    UnknownTopology(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("coin slot {slot} out of range for degree {degree}")]
    InvalidSlot { slot: usize, degree: usize },

    #[error("vertex ({0}) lies outside the grid")]
    OutOfGrid(VertexCoord),

    #[error("invalid walk parameters: {0}")]
    InvalidParams(String),

    #[error("dense operator of dimension {dim} exceeds the limit of {limit}")]
    DenseTooLarge { dim: usize, limit: usize },

    #[error("dimension mismatch: operator is {expected}, state is {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("no peak found within horizon of {horizon} steps")]
    NoPeak { horizon: usize },

    #[error("runtime fit needs at least 3 records, got {0}")]
    TooFewRecords(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
