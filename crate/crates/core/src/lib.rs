//! Search by lackadaisical coined quantum walks on periodic 2D lattices.
//!
//! The walk lives on `ℂ^N ⊗ ℂ^(d+1)`: `d` direction slots plus a weighted
//! self-loop. One search step is query, Grover coin, flip-flop shift.
//! Triangular (`d = 6`), honeycomb (`d = 3`) and rectangular (`d = 4`)
//! lattices are provided as [`lattice::Lattice`] strategies.

pub mod dense;
mod error;
pub mod experiments;
pub mod lattice;
pub mod output;
pub mod reference;
pub mod topology;
pub mod verify;
pub mod walk;

pub use error::{Error, Result};
pub use topology::{CoinSlot, GridSpec, Topology, VertexCoord, VertexType};
pub use walk::{CoinVector, Walk, WalkParams, WalkState};
