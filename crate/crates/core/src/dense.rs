//! Explicit step matrices for small grids.
//!
//! The operator is assembled from its factors with no shortcuts: `Q` as a
//! ±1 diagonal, `I ⊗ C` as a block-diagonal of explicit `2|s⟩⟨s| − I`
//! blocks, and `S` as a permutation matrix read off `resolve_shift`. It is a
//! test oracle for [`crate::walk::Walk`], not a production path.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::topology::{CoinSlot, GridSpec};
use crate::walk::{WalkParams, WalkState};
use crate::Error;

/// Largest operator dimension `N·(d+1)` that will be built.
pub const MAX_DENSE_DIM: usize = 4096;

/// Square complex matrix over the `(vertex, slot)` basis, index
/// `vertex·(d+1) + slot`.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    slots: usize,
    matrix: DMatrix<Complex64>,
}

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn check_size(spec: &GridSpec) -> Result<usize, Error> {
    let dim = spec.vertex_count() * spec.slots();
    if dim > MAX_DENSE_DIM {
        return Err(Error::DenseTooLarge {
            dim,
            limit: MAX_DENSE_DIM,
        });
    }
    Ok(dim)
}

impl DenseOperator {
    pub fn from_matrix(slots: usize, matrix: DMatrix<Complex64>) -> Self {
        assert!(matrix.is_square(), "dense operator must be square");
        DenseOperator { slots, matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn compose(&self, rhs: &DenseOperator) -> DenseOperator {
        DenseOperator {
            slots: self.slots,
            matrix: &self.matrix * &rhs.matrix,
        }
    }

    /// Max-entry deviation of `U†U` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let product = self.matrix.adjoint() * &self.matrix;
        let id = DMatrix::<Complex64>::identity(self.dim(), self.dim());
        max_abs(&(product - id))
    }

    /// Max-entry deviation between two operators.
    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        max_abs(&(&self.matrix - &other.matrix))
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    pub fn apply(&self, state: &WalkState) -> Result<WalkState, Error> {
        if state.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: state.len(),
            });
        }
        let v = DVector::from_column_slice(state.amplitudes());
        let out = &self.matrix * v;
        Ok(WalkState::from_amplitudes(
            state.slots(),
            out.as_slice().to_vec(),
        ))
    }
}

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Query operator `Q ⊗ I`.
pub fn build_oracle(params: &WalkParams) -> Result<DenseOperator, Error> {
    let spec = &params.spec;
    let dim = check_size(spec)?;
    let slots = spec.slots();
    let mut m = DMatrix::<Complex64>::identity(dim, dim);
    for v in &params.marked {
        let base = spec.vertex_index(*v) * slots;
        for s in 0..slots {
            m[(base + s, base + s)] = -one();
        }
    }
    Ok(DenseOperator::from_matrix(slots, m))
}

/// `I ⊗ C` with `C = 2|s_c⟩⟨s_c| − I`.
pub fn build_coin(params: &WalkParams) -> Result<DenseOperator, Error> {
    let spec = &params.spec;
    let dim = check_size(spec)?;
    let slots = spec.slots();
    let d = spec.degree() as f64;
    let l = params.loop_weight;
    let sc: Vec<f64> = (0..slots)
        .map(|s| {
            if s == spec.degree() {
                l.sqrt() / (d + l).sqrt()
            } else {
                1.0 / (d + l).sqrt()
            }
        })
        .collect();
    let mut block = DMatrix::<Complex64>::zeros(slots, slots);
    for i in 0..slots {
        for j in 0..slots {
            let delta = if i == j { 1.0 } else { 0.0 };
            block[(i, j)] = Complex64::new(2.0 * sc[i] * sc[j] - delta, 0.0);
        }
    }
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    for v in 0..spec.vertex_count() {
        let base = v * slots;
        m.view_mut((base, base), (slots, slots)).copy_from(&block);
    }
    Ok(DenseOperator::from_matrix(slots, m))
}

/// Flip-flop shift permutation matrix.
pub fn build_shift(spec: &GridSpec) -> Result<DenseOperator, Error> {
    let dim = check_size(spec)?;
    let slots = spec.slots();
    let mut m = DMatrix::<Complex64>::from_element(dim, dim, zero());
    for v in spec.vertices() {
        for s in 0..slots {
            let (w, t) = spec.resolve_shift(v, CoinSlot(s))?;
            let col = spec.vertex_index(v) * slots + s;
            let row = spec.vertex_index(w) * slots + t.index();
            m[(row, col)] = one();
        }
    }
    Ok(DenseOperator::from_matrix(slots, m))
}

/// `S · (I ⊗ C)`, the walk without the query.
pub fn build_dense_walk(params: &WalkParams) -> Result<DenseOperator, Error> {
    Ok(build_shift(&params.spec)?.compose(&build_coin(params)?))
}

/// `S · (I ⊗ C) · (Q ⊗ I)`.
pub fn build_dense_step(params: &WalkParams) -> Result<DenseOperator, Error> {
    Ok(build_dense_walk(params)?.compose(&build_oracle(params)?))
}

/// `t` successive matrix–vector products.
pub fn evolve_dense(
    op: &DenseOperator,
    state: &WalkState,
    steps: usize,
) -> Result<WalkState, Error> {
    if state.len() != op.dim() {
        return Err(Error::DimensionMismatch {
            expected: op.dim(),
            actual: state.len(),
        });
    }
    let mut current = state.clone();
    for _ in 0..steps {
        current = op.apply(&current)?;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{Topology, VertexCoord};
    use crate::walk::{degree_over_n, Walk};

    fn params(t: Topology, side: usize, l: f64, marked: Vec<VertexCoord>) -> WalkParams {
        WalkParams::new(GridSpec::square(t, side).unwrap(), l, marked).unwrap()
    }

    #[test]
    fn unmarked_operator_fixes_initial_state() {
        for t in Topology::ALL {
            let g = GridSpec::square(t, 4).unwrap();
            let p = WalkParams::new(g, degree_over_n(&g), vec![]).unwrap();
            let op = build_dense_step(&p).unwrap();
            let s0 = WalkState::initial(&p);
            assert!(op.apply(&s0).unwrap().max_abs_diff(&s0) < 1e-12, "{t}");
        }
    }

    #[test]
    fn honeycomb_step_is_unitary() {
        let p = params(
            Topology::Honeycomb,
            4,
            3.0 / 16.0,
            vec![VertexCoord::new(1, 2)],
        );
        assert!(build_dense_step(&p).unwrap().unitarity_defect() < 1e-10);
    }

    #[test]
    fn walk_squared_matches_double_application() {
        let p = params(Topology::Triangular, 4, 0.0, vec![]);
        let u = build_dense_walk(&p).unwrap();
        let u2 = u.compose(&u);
        let s = build_shift(&p.spec).unwrap();
        let c = build_coin(&p).unwrap();
        let direct = s.compose(&c).compose(&s).compose(&c);
        assert!(u2.max_abs_diff(&direct) < 1e-14);
        // Q = I here, so the search step is the plain walk
        assert!(build_dense_step(&p).unwrap().max_abs_diff(&u) == 0.0);
    }

    #[test]
    fn shift_matrix_is_symmetric_permutation() {
        for t in Topology::ALL {
            let g = GridSpec::square(t, 4).unwrap();
            let s = build_shift(&g).unwrap();
            assert!(s.is_symmetric(), "{t}");
            assert_eq!(
                s.compose(&s).max_abs_diff(&DenseOperator::from_matrix(
                    g.slots(),
                    DMatrix::identity(s.dim(), s.dim())
                )),
                0.0
            );
            for row in s.matrix().row_iter() {
                assert_eq!(row.iter().filter(|z| **z == one()).count(), 1);
            }
        }
    }

    #[test]
    fn evolve_zero_steps_is_identity_and_dims_checked() {
        let p = params(Topology::Rectangular, 4, 0.25, vec![VertexCoord::new(0, 0)]);
        let op = build_dense_step(&p).unwrap();
        let s0 = WalkState::initial(&p);
        assert_eq!(evolve_dense(&op, &s0, 0).unwrap(), s0);
        let wrong = WalkState::zeros(4, 5);
        assert!(matches!(
            evolve_dense(&op, &wrong, 1),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn size_guard() {
        let g = GridSpec::square(Topology::Triangular, 32).unwrap();
        let p = WalkParams::new(g, 0.0, vec![]).unwrap();
        assert!(matches!(
            build_dense_step(&p),
            Err(Error::DenseTooLarge { dim: 7168, .. })
        ));
    }

    #[test]
    fn triangular_single_step_matches_engine() {
        let p = params(
            Topology::Triangular,
            4,
            6.0 / 16.0,
            vec![VertexCoord::new(2, 2)],
        );
        let op = build_dense_step(&p).unwrap();
        let mut walk = Walk::new(p.clone()).unwrap();
        let s0 = walk.initial_state();
        let dense = op.apply(&s0).unwrap();
        let mut fast = s0.clone();
        walk.step(&mut fast);
        assert!(dense.max_abs_diff(&fast) < 1e-12);
    }
}
