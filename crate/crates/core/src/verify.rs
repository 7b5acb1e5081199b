//! Self-checks run by the `verify` subcommand and the test suites.
//!
//! Each check returns a [`Check`] carrying the measured deviation and the
//! tolerance it was held to, so callers can print a table.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dense::{build_dense_step, DenseOperator};
use crate::reference::LooplessWalk;
use crate::topology::{CoinSlot, GridSpec, Topology, VertexCoord};
use crate::walk::{degree_over_n, Walk, WalkParams, WalkState};
use crate::Error;

pub const DENSE_TOLERANCE: f64 = 1e-10;
pub const INVOLUTION_TOLERANCE: f64 = 1e-12;
pub const NORM_TOLERANCE: f64 = 1e-10;
pub const EMBEDDING_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn below(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            value,
            tolerance,
            passed: value < tolerance,
        }
    }
}

/// Seeded random unit-norm state with the grid's slot layout.
pub fn random_state(spec: &GridSpec, seed: u64) -> WalkState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let amps: Vec<Complex64> = (0..spec.vertex_count() * spec.slots())
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let mut state = WalkState::from_amplitudes(spec.slots(), amps);
    let norm = state.norm();
    for a in state.amplitudes_mut() {
        *a /= norm;
    }
    state
}

/// Largest elementwise gap between `steps` applications of `stepper` and of
/// the dense step matrix, both started from `ψ(0)` and compared after every
/// step.
pub fn dense_trajectory_gap(
    params: &WalkParams,
    steps: usize,
    stepper: &mut dyn FnMut(&mut WalkState),
) -> Result<f64, Error> {
    let op = build_dense_step(params)?;
    let mut dense = WalkState::initial(params);
    let mut fast = dense.clone();
    let mut gap = 0.0f64;
    for _ in 0..steps {
        dense = op.apply(&dense)?;
        stepper(&mut fast);
        gap = gap.max(dense.max_abs_diff(&fast));
    }
    Ok(gap)
}

/// Dense equivalence of the engine's `step`.
pub fn check_dense_equivalence(params: &WalkParams, steps: usize) -> Result<Check, Error> {
    let mut walk = Walk::new(params.clone())?;
    let gap = dense_trajectory_gap(params, steps, &mut |s| walk.step(s))?;
    Ok(Check::below(
        format!(
            "dense-equivalence {} l={:.4} {} steps",
            params.spec, params.loop_weight, steps
        ),
        gap,
        DENSE_TOLERANCE,
    ))
}

pub fn check_dense_unitarity(params: &WalkParams) -> Result<Check, Error> {
    let op: DenseOperator = build_dense_step(params)?;
    Ok(Check::below(
        format!(
            "dense-unitarity {} l={:.4}",
            params.spec, params.loop_weight
        ),
        op.unitarity_defect(),
        DENSE_TOLERANCE,
    ))
}

/// `S² = Q² = C² = I` on a random state.
pub fn check_involutions(params: &WalkParams, seed: u64) -> Result<Vec<Check>, Error> {
    let mut walk = Walk::new(params.clone())?;
    let original = random_state(&params.spec, seed);
    let mut out = Vec::with_capacity(3);
    let label = |op: &str| {
        format!(
            "involution {op} {} l={:.4}",
            params.spec, params.loop_weight
        )
    };

    let mut s = original.clone();
    walk.apply_shift(&mut s);
    walk.apply_shift(&mut s);
    out.push(Check::below(
        label("S^2"),
        s.max_abs_diff(&original),
        INVOLUTION_TOLERANCE,
    ));

    let mut s = original.clone();
    walk.apply_oracle(&mut s);
    walk.apply_oracle(&mut s);
    out.push(Check::below(
        label("Q^2"),
        s.max_abs_diff(&original),
        INVOLUTION_TOLERANCE,
    ));

    let mut s = original.clone();
    walk.apply_coin(&mut s);
    walk.apply_coin(&mut s);
    out.push(Check::below(
        label("C^2"),
        s.max_abs_diff(&original),
        INVOLUTION_TOLERANCE,
    ));
    Ok(out)
}

/// Norm drift `|‖ψ(t)‖ − 1|` after `steps` search steps from `ψ(0)`.
pub fn check_norm_drift(params: &WalkParams, steps: usize) -> Result<Check, Error> {
    let mut walk = Walk::new(params.clone())?;
    let mut s = walk.initial_state();
    let mut drift = 0.0f64;
    for _ in 0..steps {
        walk.step(&mut s);
        drift = drift.max((s.norm() - 1.0).abs());
    }
    Ok(Check::below(
        format!(
            "norm-drift {} l={:.4} {} steps",
            params.spec, params.loop_weight, steps
        ),
        drift,
        NORM_TOLERANCE,
    ))
}

/// Loop amplitudes stay exactly zero at `l = 0`, and the direction slots
/// follow the loop-free reference walk.
pub fn check_loopless_embedding(
    spec: &GridSpec,
    marked: &[VertexCoord],
    steps: usize,
) -> Result<Check, Error> {
    let params = WalkParams::new(*spec, 0.0, marked.to_vec())?;
    let mut walk = Walk::new(params)?;
    let reference = LooplessWalk::new(*spec, marked)?;
    let d = spec.degree();
    let mut state = walk.initial_state();
    let mut expected = reference.initial_state();
    let mut gap = 0.0f64;
    let mut loop_nonzero = false;
    for t in 0..=steps {
        if t > 0 {
            walk.step(&mut state);
            expected = reference.step(&expected);
        }
        for v in 0..spec.vertex_count() {
            loop_nonzero |= state.amplitude(v, CoinSlot(d)) != Complex64::new(0.0, 0.0);
            for s in 0..d {
                gap = gap.max((state.amplitude(v, CoinSlot(s)) - expected[v * d + s]).norm());
            }
        }
    }
    let mut check = Check::below(
        format!("loopless-embedding {spec} {steps} steps"),
        gap,
        EMBEDDING_TOLERANCE,
    );
    if loop_nonzero {
        check.value = f64::INFINITY;
        check.passed = false;
    }
    Ok(check)
}

/// Exhaustive flip-flop involution and bijection over every `(vertex, slot)`.
pub fn check_flip_flop(spec: &GridSpec) -> Result<Check, Error> {
    let table = spec.shift_table();
    let mut failures = 0usize;
    let mut hit = vec![false; table.len()];
    for v in spec.vertices() {
        for s in 0..spec.slots() {
            let (w, t) = spec.resolve_shift(v, CoinSlot(s))?;
            let back = spec.resolve_shift(w, t)?;
            if back != (v, CoinSlot(s)) {
                failures += 1;
            }
            let j = spec.vertex_index(w) * spec.slots() + t.index();
            if std::mem::replace(&mut hit[j], true) {
                failures += 1;
            }
        }
    }
    Ok(Check::below(
        format!("flip-flop {spec}"),
        failures as f64,
        0.5,
    ))
}

/// The full suite run by `verify`: small grids only.
pub fn run_all() -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();
    for topology in Topology::ALL {
        for side in [4usize, 6] {
            let spec = GridSpec::square(topology, side)?;
            let marked = vec![VertexCoord::new(1, 2)];
            for l in [0.0, degree_over_n(&spec), 1.0] {
                let params = WalkParams::new(spec, l, marked.clone())?;
                checks.push(check_dense_equivalence(&params, 25)?);
            }
            let params = WalkParams::new(spec, degree_over_n(&spec), marked.clone())?;
            checks.push(check_dense_unitarity(&params)?);
            checks.extend(check_involutions(&params, 0x5eed + side as u64)?);
            checks.push(check_norm_drift(&params, 1000)?);
            checks.push(check_loopless_embedding(&spec, &marked, 200)?);
        }
        for side in [6usize, 8] {
            checks.push(check_flip_flop(&GridSpec::square(topology, side)?)?);
        }
    }
    Ok(checks)
}
