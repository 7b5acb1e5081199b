use lackadaisical::experiments::{
    default_horizon, find_first_peak, run_curve, scaling_study, sweep_loop_weight, TimeSeries,
};
use lackadaisical::topology::{GridSpec, Topology, VertexCoord};
use lackadaisical::walk::{degree_over_n, WalkParams};

/// Brute-force argmax over the first oscillation: the prefix that ends once
/// the probability has risen above 10·p(0) and then fallen below half of
/// the running maximum.
fn first_oscillation_argmax(series: &TimeSeries) -> (usize, f64) {
    let p: Vec<f64> = series.probabilities().collect();
    let mut best = (0, p[0]);
    for (t, &q) in p.iter().enumerate() {
        if q > best.1 {
            best = (t, q);
        }
        if best.1 > 10.0 * p[0] && q < best.1 / 2.0 {
            break;
        }
    }
    best
}

#[test]
fn first_peak_matches_brute_force_argmax() {
    for t in Topology::ALL {
        let spec = GridSpec::square(t, 16).unwrap();
        let params = WalkParams::search(spec).unwrap();
        let series = run_curve(&params, default_horizon(spec.vertex_count())).unwrap();
        let peak = find_first_peak(&series).unwrap();
        let (t_max, p_max) = first_oscillation_argmax(&series);
        assert_eq!(peak.t_peak, t_max, "{spec}");
        assert_eq!(peak.p_peak, p_max, "{spec}");
        assert!(peak.p_peak > 10.0 / 256.0);
    }
}

#[test]
fn peak_is_independent_of_marked_position() {
    for t in [Topology::Triangular, Topology::Honeycomb] {
        let spec = GridSpec::square(t, 24).unwrap();
        let l = degree_over_n(&spec);
        let horizon = default_horizon(spec.vertex_count());
        let peaks: Vec<_> = [
            VertexCoord::new(12, 12),
            VertexCoord::new(0, 0),
            VertexCoord::new(7, 3),
        ]
        .into_iter()
        .map(|m| {
            let params = WalkParams::new(spec, l, vec![m]).unwrap();
            find_first_peak(&run_curve(&params, horizon).unwrap()).unwrap()
        })
        .collect();
        for p in &peaks[1..] {
            assert_eq!(p.t_peak, peaks[0].t_peak, "{spec}");
            assert!((p.p_peak - peaks[0].p_peak).abs() < 1e-12, "{spec}");
        }
    }
}

#[test]
fn overlap_starts_at_one_and_decays_by_the_peak() {
    let spec = GridSpec::square(Topology::Triangular, 32).unwrap();
    let params = WalkParams::search(spec).unwrap();
    let series = run_curve(&params, default_horizon(spec.vertex_count())).unwrap();
    assert!((series.records[0].overlap_abs - 1.0).abs() < 1e-12);
    let peak = find_first_peak(&series).unwrap();
    assert!(series.records[peak.t_peak].overlap_abs < 0.3);
}

#[test]
fn sweep_and_scaling_are_deterministic() {
    let spec = GridSpec::square(Topology::Honeycomb, 16).unwrap();
    let grid = [0.005, 0.01, 0.02, 0.04];
    let marked = [VertexCoord::new(8, 8)];
    assert_eq!(
        sweep_loop_weight(&spec, &marked, &grid, None).unwrap(),
        sweep_loop_weight(&spec, &marked, &grid, None).unwrap()
    );
    assert_eq!(
        scaling_study(Topology::Triangular, &[12, 16, 20]).unwrap(),
        scaling_study(Topology::Triangular, &[12, 16, 20]).unwrap()
    );
}
