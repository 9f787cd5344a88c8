//! `renormkit`: batch experiments writing CSV, JSON and SVG.
//!
//! Exit codes: 0 on success or a matching check, 1 when a checked
//! property fails, 2 on usage or I/O errors.

mod algebra;
mod codes;
mod output;
mod probe;

use clap::{Parser, Subcommand};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Debug, Parser, Serialize)]
#[command(name = "renormkit", version, about = "Code bounds, complexity proxies and graph renormalization experiments")]
struct Cli {
    /// Echo the run configuration as JSON on stderr.
    #[arg(long, global = true)]
    #[serde(skip)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
enum Command {
    /// Code clouds and partition sweeps.
    Codes {
        #[command(subcommand)]
        action: codes::CodesCommand,
    },
    /// Compare the graph expansion with the Wick oracle.
    FeynmanCheck(algebra::FeynmanArgs),
    /// Check the bialgebra and antipode axioms on an exhaustive family.
    HopfVerify(algebra::HopfArgs),
    /// Birkhoff decomposition of a character given as JSON.
    Birkhoff(algebra::BirkhoffArgs),
    /// Classify the orbit of a point under a lifted partial function.
    Probe(probe::ProbeArgs),
    /// Rank-frequency table and power-law fit.
    Zipf(probe::ZipfArgs),
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) | Failure::Io(_) => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::Check(m) => f.write_str(m),
        }
    }
}

pub fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.verbose {
        eprintln!("{}", serde_json::to_string(&cli.command).expect("config serializes"));
    }
    let result = match &cli.command {
        Command::Codes { action } => codes::run(action),
        Command::FeynmanCheck(a) => algebra::feynman_check(a),
        Command::HopfVerify(a) => algebra::hopf_verify(a),
        Command::Birkhoff(a) => algebra::birkhoff(a),
        Command::Probe(a) => probe::probe(a),
        Command::Zipf(a) => probe::zipf(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("renormkit: {f}");
            ExitCode::from(f.code())
        }
    }
}
