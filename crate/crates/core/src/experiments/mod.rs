//! Probability curves, self-loop sweeps, scaling studies and runtime fits.

mod curve;
mod fit;
mod peak;
mod scaling;
mod sweep;

pub use curve::{run_curve, SeriesRecord, TimeSeries};
pub use fit::{fit_runtime, fit_samples, subset_constants, FitResult, LogBase};
pub use peak::{find_first_peak, PeakResult, PEAK_THRESHOLD_FACTOR, PEAK_WINDOW};
pub use scaling::{scaling_study, ScalingRecord};
pub use sweep::{default_loop_grid, geometric_grid, sweep_loop_weight, LoopSweepRecord};

/// Default simulation horizon `⌈3·√(N ln N)⌉`.
pub fn default_horizon(vertex_count: usize) -> usize {
    let n = vertex_count as f64;
    (3.0 * (n * n.ln()).sqrt()).ceil() as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horizon_values() {
        // 3·√(256·ln 256) = 3·√1419.57 = 113.03
        assert_eq!(default_horizon(256), 114);
        // 3·√(10000·ln 10000) = 3·√92103.4 = 910.47
        assert_eq!(default_horizon(10_000), 911);
    }
}
