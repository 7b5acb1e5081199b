use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use lackadaisical::experiments::{
    default_horizon, find_first_peak, geometric_grid, run_curve, scaling_study, sweep_loop_weight,
    LoopSweepRecord,
};
use lackadaisical::output::{
    format_number, write_json, write_scaling_csv, write_series_csv, write_sweep_csv, Document,
    ScalingSummary, SCHEMA_VERSION,
};
use lackadaisical::walk::{default_marked, degree_over_n};
use lackadaisical::{verify as checks, Error, GridSpec, WalkParams};

use crate::args::{Format, GridArgs, OutputArgs, RunArgs, ScalingArgs, SweepArgs};

#[derive(Debug)]
pub enum Failure {
    Verification(usize),
    Config(Error),
    NoPeak(String),
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) | Failure::Io(_) => 1,
            Failure::Config(_) => 2,
            Failure::NoPeak(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Verification(n) => write!(f, "{n} verification check(s) failed"),
            Failure::Config(e) => write!(f, "{e}"),
            Failure::NoPeak(msg) => f.write_str(msg),
            Failure::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoPeak { .. } => Failure::NoPeak(e.to_string()),
            other => Failure::Config(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

fn is_stdout(path: Option<&Path>) -> bool {
    path.is_none_or(|p| p.as_os_str() == "-")
}

fn open_output(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    match path {
        Some(p) if !is_stdout(Some(p)) => Ok(Box::new(BufWriter::new(File::create(p)?))),
        _ => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

/// Human-readable summaries go to stdout unless the data itself does.
fn report(output: &OutputArgs) -> Box<dyn Write> {
    if is_stdout(output.out.as_deref()) {
        Box::new(io::stderr())
    } else {
        Box::new(io::stdout())
    }
}

fn build_params(
    grid: &GridArgs,
    loop_weight: impl FnOnce(&GridSpec) -> f64,
) -> Result<WalkParams, Failure> {
    let spec = GridSpec::new(grid.topology, grid.width, grid.height)?;
    let marked = grid.marked.unwrap_or_else(|| default_marked(&spec));
    Ok(WalkParams::new(spec, loop_weight(&spec), vec![marked])?)
}

pub fn run(args: &RunArgs) -> CmdResult {
    let params = build_params(&args.grid, |spec| {
        args.loop_weight.resolve(|| degree_over_n(spec))
    })?;
    let steps = args
        .steps
        .resolve(|| default_horizon(params.spec.vertex_count()));
    let series = run_curve(&params, steps)?;

    let mut out = open_output(args.output.out.as_deref())?;
    match args.output.format {
        Format::Csv => write_series_csv(&mut out, &series)?,
        Format::Json => write_json(
            &mut out,
            &Document {
                schema_version: SCHEMA_VERSION,
                kind: "curve",
                records: &series.records,
            },
        )?,
    }
    out.flush()?;

    let mut rep = report(&args.output);
    writeln!(
        rep,
        "{} l={} marked={} steps={}",
        params.spec,
        format_number(params.loop_weight),
        params.marked[0],
        steps
    )?;
    let peak = find_first_peak(&series)?;
    writeln!(
        rep,
        "t_peak={} p_peak={}",
        peak.t_peak,
        format_number(peak.p_peak)
    )?;
    Ok(())
}

pub fn sweep_loop(args: &SweepArgs) -> CmdResult {
    let params = build_params(&args.grid, |_| 0.0)?;
    let spec = params.spec;
    let base = degree_over_n(&spec);
    let l_min = args.l_min.resolve(|| base / 10.0);
    let l_max = args.l_max.resolve(|| base * 10.0);
    let grid = geometric_grid(l_min, l_max, args.l_points)?;
    let horizon = args.steps.resolve(|| default_horizon(spec.vertex_count()));
    let records = sweep_loop_weight(&spec, &params.marked, &grid, Some(horizon))?;

    let mut out = open_output(args.output.out.as_deref())?;
    match args.output.format {
        Format::Csv => write_sweep_csv(&mut out, &records)?,
        Format::Json => write_json(
            &mut out,
            &Document {
                schema_version: SCHEMA_VERSION,
                kind: "loop-sweep",
                records: &records,
            },
        )?,
    }
    out.flush()?;

    let mut rep = report(&args.output);
    let found: Vec<LoopSweepRecord> = records.iter().copied().filter(|r| r.peak_found).collect();
    let Some(best) = LoopSweepRecord::argmax(&found) else {
        return Err(Failure::NoPeak(format!(
            "no loop weight produced a peak within {horizon} steps"
        )));
    };
    writeln!(
        rep,
        "argmax l={} ({} x degree/N) t_peak={} p_peak={}",
        format_number(best.l),
        format_number(best.l / base),
        best.t_peak,
        format_number(best.p_peak)
    )?;
    Ok(())
}

pub fn scaling(args: &ScalingArgs) -> CmdResult {
    let sizes = &args.sizes.0;
    if sizes.len() < 3 {
        return Err(Failure::Config(Error::TooFewRecords(sizes.len())));
    }
    for &s in sizes {
        GridSpec::square(args.topology, s)?;
    }
    let records = scaling_study(args.topology, sizes)?;
    let summary = ScalingSummary::from_records(args.topology, records.clone())?;

    let mut out = open_output(args.output.out.as_deref())?;
    match args.output.format {
        Format::Csv => write_scaling_csv(&mut out, &records)?,
        Format::Json => write_json(&mut out, &summary)?,
    }
    out.flush()?;

    match &args.summary {
        Some(path) if !is_stdout(Some(path)) => {
            let mut f = open_output(Some(path))?;
            write_json(&mut f, &summary)?;
            f.flush()?;
        }
        _ if args.output.format == Format::Json => {}
        _ => {
            let mut rep = report(&args.output);
            write_json(&mut rep, &summary)?;
        }
    }
    Ok(())
}

pub fn verify() -> CmdResult {
    let results = checks::run_all()?;
    let width = results.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut stdout = io::stdout().lock();
    let mut failed = 0;
    for c in &results {
        if !c.passed {
            failed += 1;
        }
        writeln!(
            stdout,
            "{:<width$}  {}  {:.3e} (tol {:.0e})",
            c.name,
            if c.passed { "PASS" } else { "FAIL" },
            c.value,
            c.tolerance,
        )?;
    }
    writeln!(stdout, "{} checks, {} failed", results.len(), failed)?;
    if failed > 0 {
        return Err(Failure::Verification(failed));
    }
    Ok(())
}
