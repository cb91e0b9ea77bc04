//! `mtc`: batch runner for the verification workbench.
//!
//! Every command prints a JSON [`report::RunReport`] on stdout. The exit
//! status is 0 when the outcome is `pass`, 1 when it is `fail` and 2 when
//! the input is rejected.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

pub const DEFAULT_SEED: u64 = 20_240_611;

#[derive(Parser)]
#[command(name = "mtc", version, about = "Exact verification runs for the minimal-torus counting calculus")]
struct Cli {
    /// Also write the report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Basis of the homogeneous harmonic polynomials of one degree.
    Harmonic {
        #[arg(long)]
        degree: u32,
    },
    /// Rank lower bound of the Wendl map on a Petri kernel.
    VerifyWendl {
        #[arg(long)]
        degree: u32,
        /// Comma-separated jet orders.
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<u32>,
        /// Random kernel combinations to add to the basis.
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long, env = "MTC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Twisted index of a local system on an orbifold sphere.
    Index {
        #[arg(long)]
        json: PathBuf,
        /// Overrides the convention in the file.
        #[arg(long)]
        convention: Option<mtc_core::orbifold::IndexConvention>,
    },
    /// Codimension bound of a Brill–Noether stratum.
    Codim {
        #[arg(long)]
        json: PathBuf,
    },
    /// Schur reduction on seeded random finite operators.
    Schur {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, env = "MTC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Count invariance of a scenario file.
    Simulate {
        #[arg(long)]
        json: PathBuf,
        /// `canonical`, `derived`, `definition` or a path to a table file.
        #[arg(long, default_value = "canonical")]
        table: String,
        /// Overrides one table entry, e.g. `+1@2=0`. Repeatable.
        #[arg(long)]
        corrupt: Vec<String>,
    },
    /// Count invariance of seeded random legal scenarios.
    RandomScenarios {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value = "canonical")]
        table: String,
        #[arg(long, env = "MTC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Solve the wall relations for the weight table.
    SolveWeights {
        #[arg(long, default_value_t = 4)]
        max_power: u32,
        /// Values of n_{+0}^{2^j} for j = 1..=max_power; missing ones are 0.
        #[arg(long, value_delimiter = ',')]
        normalization: Vec<i64>,
        /// Extra relation `n_t^d = v`, e.g. `+1@2=5`. Repeatable.
        #[arg(long)]
        inject: Vec<String>,
    },
    /// Write the diagram and ledger scenarios as JSON files.
    Fixtures {
        #[arg(long)]
        dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(report) => {
            let text = report.to_pretty();
            print!("{text}");
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            match report.outcome {
                report::Outcome::Pass => ExitCode::SUCCESS,
                report::Outcome::Fail => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
