//! `bdfreeze` command-line tool.

mod args;
mod contour;
mod evolve;
mod measure;
mod output;
mod parse;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

#[derive(Debug)]
pub enum Failure {
    /// Bad input; exit code 2.
    Validation(String),
    Io(String),
    /// Number of failed checks; exit code 1.
    Verification(usize),
}

fn seed_override(default: u64) -> Result<u64, Failure> {
    match std::env::var("DF_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Validation(format!("DF_SEED='{s}' is not an unsigned integer"))),
        Err(std::env::VarError::NotPresent) => Ok(default),
        Err(e) => Err(Failure::Validation(format!("DF_SEED: {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Measure(a) => measure::run(a),
        Command::Evolve(a) => evolve::run(a),
        Command::Contour(a) => contour::run(a),
        Command::Verify(a) => verify::run(a, seed_override(a.seed)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(n)) => {
            eprintln!("error: {n} verification check(s) failed");
            ExitCode::from(1)
        }
        Err(Failure::Validation(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
