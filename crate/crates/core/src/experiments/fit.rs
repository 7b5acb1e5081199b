use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::ScalingRecord;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LogBase {
    Natural,
    Base2,
    Base10,
}

impl LogBase {
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Natural => x.ln(),
            LogBase::Base2 => x.log2(),
            LogBase::Base10 => x.log10(),
        }
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogBase::Natural => "natural",
            LogBase::Base2 => "base2",
            LogBase::Base10 => "base10",
        })
    }
}

impl FromStr for LogBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "natural" | "e" | "ln" => Ok(LogBase::Natural),
            "base2" | "2" => Ok(LogBase::Base2),
            "base10" | "10" => Ok(LogBase::Base10),
            _ => Err(Error::InvalidParams(format!("unknown log base {s:?}"))),
        }
    }
}

/// Through-origin least-squares fit `T ≈ c·√(N log N)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FitResult {
    pub c: f64,
    pub r2: f64,
    pub log_base: LogBase,
}

/// Fits `c = Σ T·x / Σ x²` with `x = √(N log N)`. `r2` is
/// `1 − SS_res/SS_tot` with `SS_tot` taken about the mean of `T`.
pub fn fit_runtime(records: &[ScalingRecord], log_base: LogBase) -> Result<FitResult, Error> {
    let samples: Vec<(f64, f64)> = records
        .iter()
        .map(|r| (r.vertex_count as f64, r.t_peak as f64))
        .collect();
    fit_samples(&samples, log_base)
}

/// Same fit over raw `(N, T)` samples.
pub fn fit_samples(samples: &[(f64, f64)], log_base: LogBase) -> Result<FitResult, Error> {
    if samples.len() < 3 {
        return Err(Error::TooFewRecords(samples.len()));
    }
    let points: Vec<(f64, f64)> = samples
        .iter()
        .map(|&(n, t)| ((n * log_base.log(n)).sqrt(), t))
        .collect();
    let sxy: f64 = points.iter().map(|(x, t)| x * t).sum();
    let sxx: f64 = points.iter().map(|(x, _)| x * x).sum();
    let c = sxy / sxx;
    let mean = points.iter().map(|(_, t)| t).sum::<f64>() / points.len() as f64;
    let ss_res: f64 = points.iter().map(|(x, t)| (t - c * x).powi(2)).sum();
    let ss_tot: f64 = points.iter().map(|(_, t)| (t - mean).powi(2)).sum();
    let r2 = if ss_tot > 0.0 {
        1.0 - ss_res / ss_tot
    } else if ss_res == 0.0 {
        1.0
    } else {
        f64::NEG_INFINITY
    };
    Ok(FitResult { c, r2, log_base })
}

/// Fitted constant for every subset of at least three records, in
/// lexicographic order of subset bitmask.
pub fn subset_constants(records: &[ScalingRecord], log_base: LogBase) -> Vec<f64> {
    let n = records.len();
    assert!(n < 20, "subset enumeration limited to small record sets");
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() >= 3)
        .map(|mask| {
            let subset: Vec<ScalingRecord> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| records[i])
                .collect();
            fit_runtime(&subset, log_base)
                .expect("subset has >= 3 records")
                .c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(c: f64, ns: &[usize]) -> Vec<(f64, f64)> {
        ns.iter()
            .map(|&n| {
                let n = n as f64;
                (n, c * (n * n.ln()).sqrt())
            })
            .collect()
    }

    #[test]
    fn exact_power_law_recovers_constant() {
        let samples = synthetic(2.0, &[1024, 2304, 4096, 9216, 16384]);
        let fit = fit_samples(&samples, LogBase::Natural).unwrap();
        assert!((fit.c - 2.0).abs() < 1e-12);
        assert!((fit.r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn base_change_rescales_constant() {
        let recs = vec![
            ScalingRecord {
                side: 32,
                vertex_count: 1024,
                t_peak: 110,
                p_peak: 0.9,
            },
            ScalingRecord {
                side: 48,
                vertex_count: 2304,
                t_peak: 172,
                p_peak: 0.9,
            },
            ScalingRecord {
                side: 64,
                vertex_count: 4096,
                t_peak: 241,
                p_peak: 0.9,
            },
            ScalingRecord {
                side: 96,
                vertex_count: 9216,
                t_peak: 381,
                p_peak: 0.9,
            },
        ];
        let nat = fit_runtime(&recs, LogBase::Natural).unwrap();
        let b2 = fit_runtime(&recs, LogBase::Base2).unwrap();
        let b10 = fit_runtime(&recs, LogBase::Base10).unwrap();
        let log2_e = std::f64::consts::LOG2_E;
        assert!((b2.c - nat.c / log2_e.sqrt()).abs() < 1e-9);
        assert!((b10.c - nat.c * std::f64::consts::LN_10.sqrt()).abs() < 1e-9);
        assert!((b2.r2 - nat.r2).abs() < 1e-12);
        assert!((b10.r2 - nat.r2).abs() < 1e-12);
    }

    #[test]
    fn too_few_records() {
        let samples = synthetic(1.0, &[100, 400]);
        assert!(matches!(
            fit_samples(&samples, LogBase::Natural),
            Err(Error::TooFewRecords(2))
        ));
    }

    #[test]
    fn subset_count() {
        let recs: Vec<ScalingRecord> = [256, 576, 1024, 2304, 4096]
            .iter()
            .map(|&n| ScalingRecord {
                side: 0,
                vertex_count: n,
                t_peak: n / 10,
                p_peak: 0.9,
            })
            .collect();
        // C(5,3) + C(5,4) + C(5,5)
        assert_eq!(subset_constants(&recs, LogBase::Natural).len(), 16);
    }

    #[test]
    fn log_base_parsing() {
        assert_eq!("natural".parse::<LogBase>().unwrap(), LogBase::Natural);
        assert_eq!("base2".parse::<LogBase>().unwrap(), LogBase::Base2);
        assert!("base3".parse::<LogBase>().is_err());
    }
}
