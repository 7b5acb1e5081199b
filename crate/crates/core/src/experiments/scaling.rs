use rayon::prelude::*;
use serde::Serialize;

use super::{default_horizon, find_first_peak, run_curve};
use crate::topology::{GridSpec, Topology};
use crate::walk::{default_marked, WalkParams};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScalingRecord {
    pub side: usize,
    #[serde(rename = "N")]
    pub vertex_count: usize,
    pub t_peak: usize,
    pub p_peak: f64,
}

/// First-peak time and probability on square `side × side` grids with
/// `l = degree/N` and the marked vertex at the grid center.
pub fn scaling_study(topology: Topology, sides: &[usize]) -> Result<Vec<ScalingRecord>, Error> {
    let specs = sides
        .iter()
        .map(|&s| GridSpec::square(topology, s))
        .collect::<Result<Vec<_>, _>>()?;
    specs
        .par_iter()
        .map(|spec| {
            let params = WalkParams::search(*spec)?;
            let horizon = default_horizon(spec.vertex_count());
            let peak = find_first_peak(&run_curve(&params, horizon)?)?;
            debug_assert_eq!(params.marked, vec![default_marked(spec)]);
            Ok(ScalingRecord {
                side: spec.width,
                vertex_count: spec.vertex_count(),
                t_peak: peak.t_peak,
                p_peak: peak.p_peak,
            })
        })
        .collect()
}
