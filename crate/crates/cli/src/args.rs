use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "susyanyon",
    version,
    about = "Supersymmetric chains, anyon fusion spaces and braid representations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate zero-mode or fusion-space counts over a range of N.
    Counts(CountsArgs),
    /// Evaluate residuals of one family of identities.
    Verify(VerifyArgs),
    /// Write a basis, generator set or correspondence table.
    Export(ExportArgs),
    /// List the chain models and correspondences known by name.
    Models,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Args)]
pub struct CountsArgs {
    /// qubit-fib, jk-chain, ising-chain, sis, jk-anyon, fib-anyon or ising-anyon.
    #[arg(long)]
    pub model: String,
    /// Single N or an inclusive range `a..b`.
    #[arg(long, value_parser = parse_range)]
    pub n: RangeInclusive<usize>,
    /// Per boson-number sector rows (qubit-fib only).
    #[arg(long)]
    pub sectors: bool,
    /// SIS site parameters `n,r`.
    #[arg(long, value_parser = parse_pair)]
    pub sis: Option<(usize, usize)>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Susy,
    Braid,
    Lifted,
    Pentagon,
    Hexagon,
    Correspondence,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub scope: Scope,
    /// Chain model (susy) or correspondence (correspondence).
    #[arg(long, default_value = "qubit-fib")]
    pub model: String,
    /// Chain sites, or strands for the braid scope.
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    /// Fibonacci parameter branch, 1..=4.
    #[arg(long, default_value_t = 1)]
    pub branch: u8,
    #[arg(long, value_parser = parse_pair)]
    pub sis: Option<(usize, usize)>,
    /// Residual tolerance; defaults depend on the scope.
    #[arg(long, env = "SUSYANYON_TOL")]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportObject {
    FusionBasis,
    ZeroModes,
    Generators,
    Correspondence,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(value_enum)]
    pub object: ExportObject,
    /// Anyon model (fusion-basis), chain model (zero-modes) or
    /// correspondence (correspondence).
    #[arg(long)]
    pub model: Option<String>,
    /// Anyons (fusion-basis, correspondence), strands (generators) or
    /// chain sites (zero-modes).
    #[arg(long)]
    pub n: Option<usize>,
    /// For correspondence: chain sites instead of anyons.
    #[arg(long, conflicts_with = "n")]
    pub sites: Option<usize>,
    /// Fusion outcome label; defaults to the generating species.
    #[arg(long)]
    pub outcome: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub branch: u8,
    #[arg(long, value_parser = parse_pair)]
    pub sis: Option<(usize, usize)>,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("'{t}': {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

pub fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected n,r, got '{s}'"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("'{t}': {e}"));
    Ok((num(a)?, num(b)?))
}

pub fn require<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required here")))
}
