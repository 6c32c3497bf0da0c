use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod error;
mod spec;

use error::CliError;

/// Exact computations with rings graded by a finitely generated abelian group.
#[derive(Parser)]
#[command(name = "coxgor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Twlp,
    Tslp,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of S/I.
    Hilbert {
        spec: PathBuf,
        ideal: String,
        /// Stop at this certificate level instead of certifying finiteness.
        #[arg(long)]
        max_level: Option<i64>,
        /// Largest level explored while certifying finiteness.
        #[arg(long, default_value_t = coxgor_core::algebra::DEFAULT_LEVEL_CAP)]
        cap: i64,
    },
    /// Minimal generators of Ann(f), degree by degree.
    Annihilator {
        spec: PathBuf,
        polynomial: String,
        /// Only report generators up to this certificate level.
        #[arg(long)]
        max_level: Option<i64>,
    },
    /// Hasse-Hilbert diagram of an Artinian quotient.
    Hasse {
        spec: PathBuf,
        ideal: String,
        /// Write GraphViz DOT here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Socle, greatest element and Poincare pairing ranks.
    Gorenstein { spec: PathBuf, ideal: String },
    /// Smallest Artinian enlargement with greatest element omega.
    Artinianize {
        spec: PathBuf,
        ideal: String,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        /// Write the derived spec here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = coxgor_core::algebra::DEFAULT_LEVEL_CAP)]
        cap: i64,
    },
    /// Gorenstein quotient with socle degree omega.
    Gorensteinize {
        spec: PathBuf,
        ideal: String,
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Toric Lefschetz check on Q/Ann(f).
    Lefschetz {
        spec: PathBuf,
        polynomial: String,
        #[arg(long, value_enum, default_value_t = Mode::Twlp)]
        mode: Mode,
        #[arg(long, default_value_t = 64)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also look for one linear element per degree that serves every edge.
        #[arg(long)]
        uniform: bool,
    },
    /// Both sides of the mixed Hessian criterion on one edge.
    Hessian {
        spec: PathBuf,
        polynomial: String,
        #[arg(long, allow_hyphen_values = true)]
        source: String,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Linear element in the differential ring.
        #[arg(long, allow_hyphen_values = true)]
        linear: String,
    },
    /// Rays, fan and irrelevant ideal of the grading.
    ToricReconstruct {
        spec: PathBuf,
        /// Right-hand sides of the polyhedron, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alphas: Option<Vec<i64>>,
    },
    /// Socle check for d+1 forms on the reconstructed toric variety.
    CiCheck {
        spec: PathBuf,
        #[arg(required = true)]
        forms: Vec<String>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    use commands::*;
    match cli.command {
        Command::Hilbert { spec, ideal, max_level, cap } => hilbert(&spec, &ideal, max_level, cap),
        Command::Annihilator { spec, polynomial, max_level } => annihilator(&spec, &polynomial, max_level),
        Command::Hasse { spec, ideal, dot } => hasse(&spec, &ideal, dot.as_deref()),
        Command::Gorenstein { spec, ideal } => gorenstein(&spec, &ideal),
        Command::Artinianize { spec, ideal, omega, out, cap } => artinianize(&spec, &ideal, &omega, cap, out.as_deref()),
        Command::Gorensteinize { spec, ideal, omega, out } => {
            gorensteinize(&spec, &ideal, omega.as_deref(), out.as_deref())
        }
        Command::Lefschetz { spec, polynomial, mode, trials, seed, uniform } => {
            lefschetz(&spec, &polynomial, matches!(mode, Mode::Tslp), trials, seed, uniform)
        }
        Command::Hessian { spec, polynomial, source, target, linear } => {
            hessian(&spec, &polynomial, &source, &target, &linear)
        }
        Command::ToricReconstruct { spec, alphas } => toric_reconstruct(&spec, alphas.as_deref()),
        Command::CiCheck { spec, forms } => ci_check(&spec, &forms),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
