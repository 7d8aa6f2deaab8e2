use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use potts_core::Rational;

/// Exact local-view LP toolkit for the antiferromagnetic Potts model.
#[derive(Debug, Parser)]
#[command(name = "potts", version)]
pub struct Cli {
    /// Key-value settings file (TOML) with budgets and scan grids.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the canonical local views of a degree.
    Views(ViewsArgs),
    /// Dump the local polynomials of one view.
    Stats(StatsArgs),
    /// Verify the minimization certificate for cubic graphs.
    CertifyMin(CertifyArgs),
    /// Verify the maximization certificate for cubic graphs.
    CertifyMax(CertifyArgs),
    /// Solve a local-view LP exactly, or scan it over lam.
    Lp(LpArgs),
    /// Brute-force Potts quantities of a small graph.
    Oracle(OracleArgs),
    /// Cycle closed forms.
    Cycle(CycleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SenseArg {
    Min,
    Max,
}

pub fn parse_rational(text: &str) -> Result<Rational, String> {
    potts_core::rational::parse(text)
        .map_err(|_| format!("malformed rational '{text}' (expected p/q or an integer)"))
}

#[derive(Debug, Args)]
pub struct ViewsArgs {
    #[arg(long)]
    pub degree: usize,
    /// Only views with at most this many boundary colors.
    #[arg(long)]
    pub max_colors: Option<usize>,
    /// Abort if the table would exceed this many views.
    #[arg(long)]
    pub max_views: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// 1-based ordinal in the view table.
    #[arg(long)]
    pub view: usize,
    #[arg(long, default_value_t = 3)]
    pub degree: usize,
    /// Also print the histogram numerators.
    #[arg(long)]
    pub gamma: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long)]
    pub json: bool,
    /// Write one polynomial text file per view into this directory.
    #[arg(long, value_name = "DIR")]
    pub dump_polys: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
pub struct LpArgs {
    #[command(subcommand)]
    pub action: Option<LpAction>,
    #[arg(long, required = true)]
    pub degree: Option<usize>,
    #[arg(long, required = true)]
    pub colors: Option<u32>,
    #[arg(long, required = true, value_parser = parse_rational)]
    pub lam: Option<Rational>,
    #[arg(long, value_enum, default_value = "min")]
    pub sense: SenseArg,
    /// Add one histogram-balance row per partition of d into at most q parts.
    #[arg(long)]
    pub q_partitions: bool,
    #[arg(long)]
    pub max_views: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum LpAction {
    /// Compare the LP minimum with K_{d,d} over a lam grid.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub degree: usize,
    #[arg(long)]
    pub colors: u32,
    /// Comma-separated lam values; defaults to the configured grid.
    #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
    pub lams: Option<Vec<Rational>>,
    #[arg(long)]
    pub q_partitions: bool,
    /// Stop after this many LP solves; the report is marked truncated.
    #[arg(long)]
    pub max_solves: Option<usize>,
    #[arg(long)]
    pub max_views: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// k33, k4, petersen, cycle:N, prism:N, an edge-list file, or a graph6 string.
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub colors: u32,
    #[arg(long, value_parser = parse_rational)]
    pub lam: Rational,
    #[arg(long)]
    pub max_vertices: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CycleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub colors: u32,
    #[arg(long, value_parser = parse_rational)]
    pub lam: Rational,
    /// Cross-check against brute force.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub max_vertices: Option<usize>,
    #[arg(long)]
    pub json: bool,
}
