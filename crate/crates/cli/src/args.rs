use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bdfreeze", version, about = "Quantum correlations and their freezing in Bell-diagonal states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate all measures for one correlation vector.
    Measure(MeasureArgs),
    /// Evolve a state under a flip channel and tabulate the measures.
    Evolve(EvolveArgs),
    /// Write constant-c_k contour grids, one CSV file per measure.
    Contour(ContourArgs),
    /// Run the built-in verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file; standard output when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    /// Correlation vector `c1,c2,c3`.
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    /// Comma-separated measure labels; all nine by default.
    #[arg(long)]
    pub measures: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    /// Initial correlation vector `c1,c2,c3`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "freezing", required_unless_present = "freezing", requires = "k")]
    pub c: Option<String>,
    /// Freezing initial condition `k,c,variant`.
    #[arg(long)]
    pub freezing: Option<String>,
    /// Channel: 1 bit flip, 2 bit-phase flip, 3 phase flip.
    #[arg(long, conflicts_with = "freezing")]
    pub k: Option<usize>,
    /// Markovian decoherence rate.
    #[arg(long, conflicts_with = "kernel", required_unless_present = "kernel")]
    pub gamma: Option<f64>,
    /// Two-column CSV `t,Lambda` with a header row.
    #[arg(long)]
    pub kernel: Option<PathBuf>,
    /// Time grid `start:stop:step`.
    #[arg(long)]
    pub t: String,
    #[arg(long)]
    pub measures: Option<String>,
    /// Threshold for freezing-interval detection.
    #[arg(long, default_value_t = bdfreeze::dynamics::DEFAULT_FREEZING_TOLERANCE)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct ContourArgs {
    /// Fixed axis of the slice.
    #[arg(long)]
    pub k: usize,
    /// Value of c_k on the slice.
    #[arg(long, allow_hyphen_values = true)]
    pub ck: f64,
    /// Cells per side.
    #[arg(long, default_value_t = 201)]
    pub n: usize,
    /// Comma-separated measure labels; all nine by default.
    #[arg(long)]
    pub measure: Option<String>,
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Also write the path of the freezing initial condition with this
    /// variant (1..=4) under the channel preserving c_k; needs c_k > 0.
    #[arg(long)]
    pub overlay: Option<u8>,
    /// Rate used for the overlay path.
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    /// Time grid of the overlay path; `0:3t*:t*/100` by default.
    #[arg(long)]
    pub t: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Identities,
    Oracles,
    Fmax,
    Freezing,
    Theorem3,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Freezing parameter for the line scan; 0.3 and 0.6 by default.
    #[arg(long)]
    pub c: Option<f64>,
    /// Random classical-quantum samples per state in the fidelity suite.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Random Bell-diagonal states per oracle suite.
    #[arg(long, default_value_t = 5)]
    pub states: usize,
    /// Seed of every random draw; the DF_SEED environment variable wins.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub out: Output,
}
