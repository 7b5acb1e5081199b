use serde::Serialize;

use crate::walk::{Walk, WalkParams};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesRecord {
    pub t: usize,
    pub success_probability: f64,
    pub overlap_abs: f64,
}

/// Success probability and `|⟨ψ(0)|ψ(t)⟩|` after every step, starting at `t = 0`.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct TimeSeries {
    pub records: Vec<SeriesRecord>,
}

impl TimeSeries {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn probabilities(&self) -> impl Iterator<Item = f64> + '_ {
        self.records.iter().map(|r| r.success_probability)
    }

    /// Largest probability in the series and the first step attaining it.
    pub fn max_probability(&self) -> Option<(usize, f64)> {
        self.records.iter().fold(None, |best, r| match best {
            Some((_, p)) if p >= r.success_probability => best,
            _ => Some((r.t, r.success_probability)),
        })
    }

    pub fn from_probabilities(probabilities: impl IntoIterator<Item = f64>) -> Self {
        TimeSeries {
            records: probabilities
                .into_iter()
                .enumerate()
                .map(|(t, p)| SeriesRecord {
                    t,
                    success_probability: p,
                    overlap_abs: f64::NAN,
                })
                .collect(),
        }
    }
}

/// Runs `t_max` search steps from `ψ(0)` and records every step.
pub fn run_curve(params: &WalkParams, t_max: usize) -> Result<TimeSeries, Error> {
    let mut walk = Walk::new(params.clone())?;
    let mut state = walk.initial_state();
    let mut records = Vec::with_capacity(t_max + 1);
    let record = |t: usize, walk: &Walk, state: &_| SeriesRecord {
        t,
        success_probability: walk.success_probability(state),
        overlap_abs: walk.overlap_initial(state).norm(),
    };
    records.push(record(0, &walk, &state));
    for t in 1..=t_max {
        walk.step(&mut state);
        records.push(record(t, &walk, &state));
    }
    Ok(TimeSeries { records })
}
