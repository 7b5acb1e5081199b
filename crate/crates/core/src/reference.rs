//! Loop-free reference walk with a `d`-slot coin register.
//!
//! Written independently of [`crate::walk::Walk`]: the coin is an explicit
//! `d × d` Grover matrix, the shift scatters through `resolve_shift`
//! directly, and there is no loop slot anywhere in the layout. Used to check
//! that the engine's `l = 0` runs reproduce the plain coined walk.

use num_complex::Complex64;

use crate::topology::{CoinSlot, GridSpec, VertexCoord};
use crate::Error;

#[derive(Clone, Debug)]
pub struct LooplessWalk {
    spec: GridSpec,
    marked: Vec<usize>,
    grover: Vec<f64>,
}

impl LooplessWalk {
    pub fn new(spec: GridSpec, marked: &[VertexCoord]) -> Result<Self, Error> {
        spec.validate()?;
        let d = spec.degree();
        let mut grover = vec![2.0 / d as f64; d * d];
        for i in 0..d {
            grover[i * d + i] -= 1.0;
        }
        let mut idx = Vec::with_capacity(marked.len());
        for v in marked {
            if !spec.contains(*v) {
                return Err(Error::OutOfGrid(*v));
            }
            idx.push(spec.vertex_index(*v));
        }
        idx.sort_unstable();
        idx.dedup();
        Ok(LooplessWalk {
            spec,
            marked: idx,
            grover,
        })
    }

    /// Uniform superposition over vertices and directions.
    pub fn initial_state(&self) -> Vec<Complex64> {
        let d = self.spec.degree();
        let amp = 1.0 / ((self.spec.vertex_count() * d) as f64).sqrt();
        vec![Complex64::new(amp, 0.0); self.spec.vertex_count() * d]
    }

    pub fn step(&self, state: &[Complex64]) -> Vec<Complex64> {
        let d = self.spec.degree();
        let mut queried = state.to_vec();
        for &v in &self.marked {
            for a in &mut queried[v * d..(v + 1) * d] {
                *a = -*a;
            }
        }
        let mut coined = vec![Complex64::new(0.0, 0.0); state.len()];
        for v in 0..self.spec.vertex_count() {
            for i in 0..d {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..d {
                    acc += queried[v * d + j] * self.grover[i * d + j];
                }
                coined[v * d + i] = acc;
            }
        }
        let mut shifted = vec![Complex64::new(0.0, 0.0); state.len()];
        for vc in self.spec.vertices() {
            let v = self.spec.vertex_index(vc);
            for s in 0..d {
                let (w, t) = self
                    .spec
                    .resolve_shift(vc, CoinSlot(s))
                    .expect("direction slot in range");
                shifted[self.spec.vertex_index(w) * d + t.index()] = coined[v * d + s];
            }
        }
        shifted
    }

    pub fn degree(&self) -> usize {
        self.spec.degree()
    }
}
