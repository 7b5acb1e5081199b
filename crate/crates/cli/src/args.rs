use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lackadaisical::{Topology, VertexCoord};

#[derive(Debug, Parser)]
#[command(
    name = "lqwalk",
    version,
    about = "Lackadaisical quantum walk search on periodic 2D lattices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Success probability and overlap curve for one configuration.
    Run(RunArgs),
    /// Peak probability and time across a geometric grid of loop weights.
    SweepLoop(SweepArgs),
    /// Peak time and probability across square grid sizes, with a √(N log N) fit.
    Scaling(ScalingArgs),
    /// Dense-oracle, involution, unitarity and embedding checks on small grids.
    Verify,
}

/// A number or the token `auto`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Auto<T> {
    Auto,
    Value(T),
}

impl<T: FromStr> FromStr for Auto<T>
where
    T::Err: fmt::Display,
{
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            Ok(Auto::Auto)
        } else {
            s.parse().map(Auto::Value).map_err(|e| format!("{e}"))
        }
    }
}

impl<T: Copy> Auto<T> {
    pub fn resolve(self, default: impl FnOnce() -> T) -> T {
        match self {
            Auto::Auto => default(),
            Auto::Value(v) => v,
        }
    }
}

pub fn parse_topology(s: &str) -> Result<Topology, String> {
    s.parse().map_err(|e| format!("{e}"))
}

pub fn parse_coord(s: &str) -> Result<VertexCoord, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y but got {s:?}"))?;
    let x = x
        .trim()
        .parse()
        .map_err(|e| format!("bad x coordinate: {e}"))?;
    let y = y
        .trim()
        .parse()
        .map_err(|e| format!("bad y coordinate: {e}"))?;
    Ok(VertexCoord::new(x, y))
}

/// Comma-separated list of grid sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sizes(pub Vec<usize>);

impl FromStr for Sizes {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad size {p:?}: {e}"))
            })
            .collect::<Result<_, _>>()
            .map(Sizes)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// rectangular | triangular | honeycomb
    #[arg(long, default_value = "triangular", value_parser = parse_topology)]
    pub topology: Topology,

    #[arg(long, default_value_t = 16)]
    pub width: usize,

    #[arg(long, default_value_t = 16)]
    pub height: usize,

    /// Marked vertex as x,y; defaults to (width/2, height/2).
    #[arg(long, value_parser = parse_coord)]
    pub marked: Option<VertexCoord>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file; standard output when omitted or "-".
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub grid: GridArgs,

    /// Self-loop weight l, or "auto" for degree/N.
    #[arg(long, default_value = "auto")]
    pub loop_weight: Auto<f64>,

    /// Number of steps, or "auto" for ceil(3·sqrt(N ln N)).
    #[arg(long, default_value = "auto")]
    pub steps: Auto<usize>,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub grid: GridArgs,

    /// Smallest loop weight, or "auto" for degree/(10N).
    #[arg(long, default_value = "auto")]
    pub l_min: Auto<f64>,

    /// Largest loop weight, or "auto" for 10·degree/N.
    #[arg(long, default_value = "auto")]
    pub l_max: Auto<f64>,

    /// Number of geometrically spaced weights.
    #[arg(long, default_value_t = 25)]
    pub l_points: usize,

    /// Steps per weight, or "auto" for ceil(3·sqrt(N ln N)).
    #[arg(long, default_value = "auto")]
    pub steps: Auto<usize>,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    /// rectangular | triangular | honeycomb
    #[arg(long, default_value = "triangular", value_parser = parse_topology)]
    pub topology: Topology,

    /// Comma-separated square grid sides.
    #[arg(long, default_value = "32,48,64,96,128")]
    pub sizes: Sizes,

    /// JSON fit summary file; printed to standard output when omitted.
    #[arg(long)]
    pub summary: Option<PathBuf>,

    #[command(flatten)]
    pub output: OutputArgs,
}
