mod attack;
mod bench;
mod decompose;
mod io;
mod oracle;
mod percolate;
mod seeds;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Innermost k-core collapse attacks on graphs.
#[derive(Debug, Parser)]
#[command(name = "coreattack", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Core numbers and innermost-core summary of an edge list.
    Decompose(decompose::DecomposeArgs),
    /// Run attack strategies and write per-run results.
    Attack(attack::AttackArgs),
    /// Deletion sweeps and the theoretical Q fixed point.
    Percolate(percolate::PercolateArgs),
    /// Strategy comparison table over a manifest of datasets.
    Bench(bench::BenchArgs),
    /// Exhaustive minimum attack for tiny cores.
    Oracle(oracle::OracleArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Decompose(a) => decompose::run(a),
        Command::Attack(a) => attack::run(a),
        Command::Percolate(a) => percolate::run(a),
        Command::Bench(a) => bench::run(a),
        Command::Oracle(a) => oracle::run(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
