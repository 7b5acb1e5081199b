use serde::Serialize;

use super::TimeSeries;
use crate::Error;

/// A peak must exceed this multiple of the initial probability.
pub const PEAK_THRESHOLD_FACTOR: f64 = 10.0;

/// A peak must dominate every sample within this many steps on either side.
/// Two steps spans the even/odd ripple of the triangular walk.
pub const PEAK_WINDOW: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PeakResult {
    pub t_peak: usize,
    pub p_peak: f64,
}

/// First step `t` whose probability is at least every other value in
/// `[t − PEAK_WINDOW, t + PEAK_WINDOW]` and above `PEAK_THRESHOLD_FACTOR · p(0)`.
/// Samples without a full right-hand window never qualify.
pub fn find_first_peak(series: &TimeSeries) -> Result<PeakResult, Error> {
    let p: Vec<f64> = series.probabilities().collect();
    let horizon = p.len().saturating_sub(1);
    let Some(&p0) = p.first() else {
        return Err(Error::NoPeak { horizon });
    };
    let threshold = PEAK_THRESHOLD_FACTOR * p0;
    (1..p.len().saturating_sub(PEAK_WINDOW))
        .find(|&t| {
            let lo = t.saturating_sub(PEAK_WINDOW);
            p[t] > threshold && p[lo..=t + PEAK_WINDOW].iter().all(|&q| p[t] >= q)
        })
        .map(|t| PeakResult {
            t_peak: series.records[t].t,
            p_peak: p[t],
        })
        .ok_or(Error::NoPeak { horizon })
}
