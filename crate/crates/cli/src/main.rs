mod commands;
mod dataset;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spreadrank::centrality::LgmRounding;

#[derive(Parser)]
#[command(
    name = "spreadrank",
    version,
    about = "Rank influential spreader nodes and benchmark ranking methods against SIR ground truth"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Network statistics: n, m, degrees, average distance, assortativity, epidemic threshold
    Stats(StatsArgs),
    /// Per-node scores for the selected ranking methods, as CSV
    Rank(RankArgs),
    /// Monte-Carlo SIR spreading ability of every node, as CSV
    Sir(SirArgs),
    /// Full benchmark: tau-b against SIR over a beta sweep, monotonicity, timings
    Evaluate(EvaluateArgs),
    /// Scatter data: two methods' scores plus SIR ability per node
    Correlate(CorrelateArgs),
    /// Wall-clock timing of scoring methods, optionally on synthetic scaled graphs
    Time(TimeArgs),
}

/// Where the input graph comes from.
#[derive(Args)]
struct DatasetArgs {
    /// Edge-list file path, or a dataset name listed in the manifest
    #[arg(long)]
    dataset: String,
    /// Manifest mapping dataset names to files and DKS radii ("name path radius" lines)
    #[arg(long, default_value = "datasets/manifest.txt")]
    manifest: PathBuf,
    /// Reject duplicate edges instead of collapsing them
    #[arg(long)]
    strict_duplicates: bool,
}

/// Method selection and tunables.
#[derive(Args, Clone)]
struct MethodArgs {
    /// Comma-separated methods (dc,ks,gravity,lgm,dnc,npic,dks) or 'all'
    #[arg(long, default_value = "all", value_delimiter = ',')]
    methods: Vec<String>,
    /// DKS neighborhood radius; defaults to the manifest value for named
    /// datasets, otherwise 3
    #[arg(long)]
    radius: Option<usize>,
    /// DNC degree-proportionality parameter (> 0)
    #[arg(long, default_value_t = 1.0)]
    dnc_alpha: f64,
    /// NPIC self-influence parameter, in [0.1, 1]
    #[arg(long, default_value_t = 1.0)]
    npic_alpha: f64,
    /// NPIC path-influence parameter, in [0.1, 1]
    #[arg(long, default_value_t = 1.0)]
    npic_beta: f64,
    /// Override the LGM neighborhood level instead of deriving it from the
    /// average distance
    #[arg(long)]
    lgm_radius: Option<usize>,
    /// Rounding of the derived LGM level: half-up, floor or ceil
    #[arg(long, default_value = "half-up", value_parser = clap::value_parser!(LgmRounding))]
    lgm_rounding: LgmRounding,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    dataset: DatasetArgs,
    #[arg(long, value_enum, default_value_t = output::Format::Csv)]
    format: output::Format,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RankArgs {
    #[command(flatten)]
    dataset: DatasetArgs,
    #[command(flatten)]
    methods: MethodArgs,
    #[arg(long, value_enum, default_value_t = output::Format::Csv)]
    format: output::Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct SirArgs {
    #[command(flatten)]
    dataset: DatasetArgs,
    /// Infection probability, in [0, 1]
    #[arg(long)]
    beta: f64,
    /// Independent simulations per seed node
    #[arg(long, default_value_t = 100)]
    runs: u32,
    /// Removal probability per infected node per step, in (0, 1]
    #[arg(long, default_value_t = 1.0)]
    recovery: f64,
    /// Master seed; per-run seeds derive deterministically from it
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = output::Format::Csv)]
    format: output::Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct EvaluateArgs {
    #[command(flatten)]
    dataset: DatasetArgs,
    #[command(flatten)]
    methods: MethodArgs,
    /// Explicit infection probabilities (comma-separated)
    #[arg(long, value_delimiter = ',', conflicts_with = "beta_sweep")]
    beta: Option<Vec<f64>>,
    /// Sweep start:stop:step; default is 13 points from 0.5·beta_th to 2·beta_th
    #[arg(long)]
    beta_sweep: Option<String>,
    #[arg(long, default_value_t = 100)]
    runs: u32,
    #[arg(long, default_value_t = 1.0)]
    recovery: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output directory for report.json, tau.csv, monotonicity.csv, scores.csv, timings.csv
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct CorrelateArgs {
    #[command(flatten)]
    dataset: DatasetArgs,
    #[command(flatten)]
    methods: MethodArgs,
    /// Method on the x axis
    #[arg(long)]
    method_x: String,
    /// Method on the y axis
    #[arg(long)]
    method_y: String,
    #[arg(long)]
    beta: f64,
    #[arg(long, default_value_t = 100)]
    runs: u32,
    #[arg(long, default_value_t = 1.0)]
    recovery: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = output::Format::Csv)]
    format: output::Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct TimeArgs {
    /// Edge-list file path or manifest name (omit to time synthetic graphs only)
    #[arg(long)]
    dataset: Option<String>,
    #[arg(long, default_value = "datasets/manifest.txt")]
    manifest: PathBuf,
    #[command(flatten)]
    methods: MethodArgs,
    /// Also time synthetic random-attachment graphs at n:m (repeatable)
    #[arg(long = "synthetic", value_name = "N:M")]
    synthetic: Vec<String>,
    /// Add 2x and 4x scaled synthetic copies of each timed graph
    #[arg(long)]
    scaling: bool,
    /// Seed for synthetic graph generation
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = output::Format::Csv)]
    format: output::Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stats(args) => commands::stats::run(args),
        Command::Rank(args) => commands::rank::run(args),
        Command::Sir(args) => commands::sir::run(args),
        Command::Evaluate(args) => commands::evaluate::run(args),
        Command::Correlate(args) => commands::correlate::run(args),
        Command::Time(args) => commands::time::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
