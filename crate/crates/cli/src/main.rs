//! `psl`: verify, construct and inspect product set-labelings stored as JSON.
//!
//! Exit status: 0 when the labeling is valid or the check passes, 1 when the
//! mathematics says no (the JSON payload still carries the witness), 2 for
//! usage, parse and I/O errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Diagnostics;

#[derive(Parser)]
#[command(name = "psl", version, about = "Product set-labelings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a labeling against every labeling class.
    Verify(VerifyArgs),
    /// Build a labeling of the requested kind.
    Construct(ConstructArgs),
    /// Run a brute-force oracle for one of the characterizations.
    CheckTheorem(CheckArgs),
    /// Print the induced edge labels.
    EdgeLabels(VerifyArgs),
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub labeling: PathBuf,
    /// Write the JSON payload here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    Isogeometric,
    Uniform,
    LikeGeometric,
    Strong,
}

#[derive(Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub scheme: Scheme,
    #[arg(long, default_value_t = 2)]
    pub ratio: u64,
    /// Characteristic index (like-geometric only).
    #[arg(long)]
    pub k: Option<u32>,
    /// Label size on every vertex, or on the x side for uniform and strong.
    #[arg(long, default_value_t = 2)]
    pub size: usize,
    /// Label size on the y side (uniform and strong).
    #[arg(long)]
    pub size_y: Option<usize>,
    /// JSON object mapping vertex ids to label sizes.
    #[arg(long)]
    pub sizes_file: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoremId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Geomchar,
    Prop3,
    Thm5,
}

#[derive(Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub id: TheoremId,
    /// Required for thm3 and thm5.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub universe: Option<u64>,
    #[arg(long)]
    pub min_size: Option<usize>,
    #[arg(long)]
    pub max_size: Option<usize>,
    /// Number of random samples; 0 sweeps exhaustively.
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Ratio (geomchar, thm4) or ratio base (thm5).
    #[arg(long)]
    pub ratio: Option<u64>,
    /// Largest characteristic index (geomchar, thm4).
    #[arg(long)]
    pub k: Option<u32>,
    /// Largest exponent of the ratio base (thm5).
    #[arg(long)]
    pub exp_max: Option<u32>,
    /// Largest label size per vertex (thm5).
    #[arg(long)]
    pub size_max: Option<usize>,
    /// Include elapsed_ms in the verdict; makes output non-reproducible.
    #[arg(long)]
    pub timing: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let diag = Diagnostics::from_env();
    let (result, out) = match cli.command {
        Command::Verify(a) => (commands::verify(&a), a.out),
        Command::Construct(a) => (commands::construct(&a), a.out),
        Command::CheckTheorem(a) => (commands::check_theorem(&a), a.out),
        Command::EdgeLabels(a) => (commands::edge_labels(&a), a.out),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            diag.error(&e.0);
            return ExitCode::from(2);
        }
    };
    for line in &outcome.notes {
        diag.note(line);
    }
    if let Err(e) = output::emit(&outcome.payload, out.as_deref()) {
        diag.error(&format!("cannot write output: {e}"));
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.code)
}
