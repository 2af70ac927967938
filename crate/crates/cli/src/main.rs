use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod report;

/// Squares of 2-degenerate graphs: constructions, exact clique and density,
/// and the nice-triple extraction with its diagnostics.
#[derive(Debug, Parser)]
#[command(name = "sqclique", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the tight graph G_D and a `.meta.json` sidecar.
    GenTight {
        #[arg(long)]
        d: u32,
        #[arg(short, long)]
        output: PathBuf,
        /// Also write the clique witness as a clique file.
        #[arg(long)]
        clique_out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write a random graph where each new vertex joins `attach` earlier ones.
    GenRandom {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        attach: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write the square of a graph.
    Square {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Exact maximum clique of a graph or of its square.
    Clique {
        #[arg(short, long)]
        input: PathBuf,
        /// Search the square of the input instead of the input.
        #[arg(long)]
        square: bool,
        #[arg(long)]
        node_budget: Option<u64>,
        /// Write the clique as a clique file.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Degeneracy and a minimum-degree peeling order.
    Degeneracy {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Exact maximum average degree with a densest-subgraph witness.
    Mad {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Token pass, classification and the extracted triple.
    ExtractNice {
        #[command(flatten)]
        run: CliqueRun,
    },
    /// Partition, H*, pair statistics, J* and inequality rows.
    Hstar {
        #[command(flatten)]
        run: CliqueRun,
    },
    /// Check maximum degree, degeneracy and square clique number of G_D.
    VerifyTight {
        /// Values of D; repeat the flag or separate with commas.
        #[arg(long, required = true, value_delimiter = ',')]
        d: Vec<u32>,
        #[arg(long, default_value_t = 100_000_000)]
        node_budget: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check the square clique and degeneracy bounds on random graphs.
    BoundSweep {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        attach: u32,
        #[arg(long, default_value_t = 10_000_000)]
        node_budget: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Extraction followed by the full H* / J* analysis in one report.
    Pipeline {
        #[command(flatten)]
        run: CliqueRun,
    },
    /// Integer solutions of the x, y, z system.
    LpSolutions {
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct CliqueRun {
    #[arg(short, long)]
    input: PathBuf,
    /// Clique file: one vertex label per line.
    #[arg(long)]
    clique: PathBuf,
    /// Degree bound D; defaults to the maximum degree of the input.
    #[arg(long)]
    d: Option<u32>,
    /// Minimum primary count for a vertex to pass secondary tokens.
    #[arg(long, default_value_t = 1)]
    secondary_threshold: u64,
    #[arg(long)]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(commands::Status::Ok) => ExitCode::SUCCESS,
        Ok(commands::Status::Failed(msg)) => {
            eprintln!("assertion failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
