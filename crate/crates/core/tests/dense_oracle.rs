use lackadaisical::dense::{build_dense_step, build_dense_walk, build_shift, evolve_dense};
use lackadaisical::topology::{GridSpec, Topology, VertexCoord};
use lackadaisical::walk::{degree_over_n, Walk, WalkParams};

fn grids() -> Vec<GridSpec> {
    Topology::ALL
        .iter()
        .map(|&t| GridSpec::square(t, 4).unwrap())
        .collect()
}

#[test]
fn fast_engine_tracks_dense_trajectory() {
    for spec in grids() {
        for l in [0.0, degree_over_n(&spec), 1.0] {
            let params = WalkParams::new(spec, l, vec![VertexCoord::new(1, 3)]).unwrap();
            let op = build_dense_step(&params).unwrap();
            let mut walk = Walk::new(params.clone()).unwrap();
            let mut fast = walk.initial_state();
            let mut dense = fast.clone();
            for t in 1..=25 {
                walk.step(&mut fast);
                dense = op.apply(&dense).unwrap();
                let gap = fast.max_abs_diff(&dense);
                assert!(gap < 1e-10, "{spec} l={l} t={t} gap={gap:e}");
                assert!((dense.norm() - 1.0).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn evolve_dense_matches_iterated_step() {
    let spec = GridSpec::square(Topology::Triangular, 4).unwrap();
    let params = WalkParams::new(spec, 6.0 / 16.0, vec![VertexCoord::new(2, 2)]).unwrap();
    let op = build_dense_step(&params).unwrap();
    let mut walk = Walk::new(params.clone()).unwrap();
    let s0 = walk.initial_state();
    let dense = evolve_dense(&op, &s0, 25).unwrap();
    let mut fast = s0;
    walk.evolve(&mut fast, 25);
    assert!(dense.max_abs_diff(&fast) < 1e-10);
}

#[test]
fn every_dense_step_is_unitary() {
    for spec in grids() {
        for l in [0.0, degree_over_n(&spec), 1.0] {
            let params = WalkParams::new(spec, l, vec![VertexCoord::new(0, 1)]).unwrap();
            let defect = build_dense_step(&params).unwrap().unitarity_defect();
            assert!(defect < 1e-10, "{spec} l={l} defect={defect:e}");
        }
        assert!(build_shift(&spec).unwrap().is_symmetric());
    }
}

#[test]
fn initial_state_is_fixed_by_unmarked_walk() {
    for spec in grids() {
        let params = WalkParams::new(spec, degree_over_n(&spec), vec![]).unwrap();
        let s0 = lackadaisical::WalkState::initial(&params);
        let u = build_dense_walk(&params).unwrap();
        assert!(u.apply(&s0).unwrap().max_abs_diff(&s0) < 1e-12);
    }
}
