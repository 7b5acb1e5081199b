use rayon::prelude::*;
use serde::Serialize;

use super::{default_horizon, find_first_peak, run_curve};
use crate::topology::{GridSpec, VertexCoord};
use crate::walk::WalkParams;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LoopSweepRecord {
    pub l: f64,
    pub t_peak: usize,
    pub p_peak: f64,
    /// False when no peak was found; `t_peak` is then the horizon and
    /// `p_peak` the largest probability seen.
    pub peak_found: bool,
}

/// `points` geometrically spaced values from `min` to `max` inclusive.
pub fn geometric_grid(min: f64, max: f64, points: usize) -> Result<Vec<f64>, Error> {
    if !(min > 0.0 && max >= min && min.is_finite() && max.is_finite()) || points == 0 {
        return Err(Error::InvalidParams(format!(
            "geometric grid needs 0 < min <= max and at least one point, got [{min}, {max}] x {points}"
        )));
    }
    if points == 1 {
        return Ok(vec![min]);
    }
    let ratio = (max / min).ln() / (points - 1) as f64;
    Ok((0..points)
        .map(|i| {
            if i + 1 == points {
                max
            } else {
                min * (ratio * i as f64).exp()
            }
        })
        .collect())
}

/// 25 points spanning `[degree/(10N), 10·degree/N]`; the middle point is `degree/N`.
pub fn default_loop_grid(spec: &GridSpec) -> Vec<f64> {
    let base = spec.degree() as f64 / spec.vertex_count() as f64;
    geometric_grid(base / 10.0, base * 10.0, 25).expect("positive bounds")
}

/// Peak time and probability for each loop weight. Weights must be strictly
/// increasing; points run in parallel and come back in input order.
pub fn sweep_loop_weight(
    spec: &GridSpec,
    marked: &[VertexCoord],
    l_values: &[f64],
    horizon: Option<usize>,
) -> Result<Vec<LoopSweepRecord>, Error> {
    if l_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParams(
            "loop weights must be strictly increasing".into(),
        ));
    }
    let horizon = horizon.unwrap_or_else(|| default_horizon(spec.vertex_count()));
    let base = WalkParams::new(*spec, 0.0, marked.to_vec())?;
    if base.marked.is_empty() {
        return Err(Error::InvalidParams("sweep needs a marked vertex".into()));
    }
    l_values
        .par_iter()
        .map(|&l| {
            let series = run_curve(&base.with_loop_weight(l)?, horizon)?;
            Ok(match find_first_peak(&series) {
                Ok(peak) => LoopSweepRecord {
                    l,
                    t_peak: peak.t_peak,
                    p_peak: peak.p_peak,
                    peak_found: true,
                },
                Err(Error::NoPeak { .. }) => LoopSweepRecord {
                    l,
                    t_peak: horizon,
                    p_peak: series.max_probability().map_or(0.0, |(_, p)| p),
                    peak_found: false,
                },
                Err(e) => return Err(e),
            })
        })
        .collect()
}

impl LoopSweepRecord {
    /// Record with the highest peak probability; first wins on ties.
    pub fn argmax(records: &[LoopSweepRecord]) -> Option<&LoopSweepRecord> {
        records
            .iter()
            .fold(None, |best: Option<&LoopSweepRecord>, r| match best {
                Some(b) if b.p_peak >= r.p_peak => Some(b),
                _ => Some(r),
            })
    }
}
