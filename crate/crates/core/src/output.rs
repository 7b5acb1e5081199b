//! CSV and JSON writers for experiment results.

use std::io::{self, Write};

use serde::Serialize;

use crate::experiments::{
    fit_runtime, FitResult, LogBase, LoopSweepRecord, ScalingRecord, TimeSeries,
};
use crate::topology::Topology;
use crate::Error;

pub const SCHEMA_VERSION: u32 = 1;

/// Formats with 12 significant digits, trailing zeros trimmed.
pub fn format_number(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    if !(-6..=15).contains(&magnitude) {
        let s = format!("{:.11e}", value);
        let (mantissa, exp) = s.split_once('e').expect("exponent present");
        return format!("{}e{}", trim_fraction(mantissa), exp);
    }
    let decimals = (11 - magnitude).max(0) as usize;
    trim_fraction(&format!("{:.*}", decimals, value)).to_string()
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_series_csv<W: Write>(out: &mut W, series: &TimeSeries) -> io::Result<()> {
    writeln!(out, "t,success_probability,overlap_abs")?;
    for r in &series.records {
        writeln!(
            out,
            "{},{},{}",
            r.t,
            format_number(r.success_probability),
            format_number(r.overlap_abs)
        )?;
    }
    Ok(())
}

pub fn write_sweep_csv<W: Write>(out: &mut W, records: &[LoopSweepRecord]) -> io::Result<()> {
    writeln!(out, "l,t_peak,p_peak")?;
    for r in records {
        writeln!(
            out,
            "{},{},{}",
            format_number(r.l),
            r.t_peak,
            format_number(r.p_peak)
        )?;
    }
    Ok(())
}

pub fn write_scaling_csv<W: Write>(out: &mut W, records: &[ScalingRecord]) -> io::Result<()> {
    writeln!(out, "N,t_peak,p_peak")?;
    for r in records {
        writeln!(
            out,
            "{},{},{}",
            r.vertex_count,
            r.t_peak,
            format_number(r.p_peak)
        )?;
    }
    Ok(())
}

/// JSON document for a scaling run.
#[derive(Clone, Debug, Serialize)]
pub struct ScalingSummary {
    pub schema_version: u32,
    pub topology: Topology,
    pub records: Vec<ScalingRecord>,
    pub c_natural: f64,
    pub c_base2: f64,
    pub c_base10: f64,
    pub r2: f64,
    pub fits: Vec<FitResult>,
}

impl ScalingSummary {
    /// Fits the records in natural, base-2 and base-10 logs.
    pub fn from_records(topology: Topology, records: Vec<ScalingRecord>) -> Result<Self, Error> {
        let natural = fit_runtime(&records, LogBase::Natural)?;
        let base2 = fit_runtime(&records, LogBase::Base2)?;
        let base10 = fit_runtime(&records, LogBase::Base10)?;
        Ok(ScalingSummary {
            schema_version: SCHEMA_VERSION,
            topology,
            records,
            c_natural: natural.c,
            c_base2: base2.c,
            c_base10: base10.c,
            r2: natural.r2,
            fits: vec![natural, base2, base10],
        })
    }
}

/// Versioned JSON wrapper for record lists.
#[derive(Clone, Debug, Serialize)]
pub struct Document<'a, T: Serialize> {
    pub schema_version: u32,
    pub kind: &'a str,
    pub records: &'a [T],
}

pub fn write_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}
