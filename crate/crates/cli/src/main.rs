//! `adgraph`: AD spectra, determinants, invariants and population sweeps
//! from the command line.
//!
//! Exit status is 0 on success, 1 when a check or verification fails, and
//! 2 on errors (bad input, unmet preconditions).

mod commands;
mod graph_arg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use graph_arg::GraphArgs;

#[derive(Debug, Parser)]
#[command(
    name = "adgraph",
    version,
    about = "Adjacency-diametrical matrices of graphs"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for random populations.
    #[arg(long, global = true, default_value_t = adgraph::verify::DEFAULT_SEED)]
    pub seed: u64,
    /// Override the numeric tolerance of closed-form comparisons.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, diameter and structural flags.
    Info(GraphArgs),
    /// AD spectrum, exact characteristic polynomial and closed forms.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        /// Exact characteristic polynomial (Berkowitz, big integers).
        #[arg(long)]
        exact: bool,
        /// Numeric eigenvalues (the default when no mode is given).
        #[arg(long)]
        numeric: bool,
        /// Closed form for paths, cycles and double stars, cross-checked.
        #[arg(long)]
        closed: bool,
    },
    /// Determinant, exactly and as a sum over spanning AD partitions.
    Det(GraphArgs),
    /// Degrees, exact AD independence/chromatic numbers and bound checks.
    Invariants {
        #[command(flatten)]
        graph: GraphArgs,
        /// Assert that the graph is planar, enabling the four-colour check.
        #[arg(long)]
        planar: bool,
        /// Vertex subset for the induced-subgraph bound, e.g. `0,2,4`.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
    },
    /// Run a theorem suite over a population (`all` runs every suite).
    Verify {
        /// Suite id: 2.1-2.3, 5.1-5.4, cor5.1, 6.1-6.9, cor6.1, clique, lex,
        /// cartesian, or `all`.
        theorem: String,
        /// e.g. `exhaustive:7+random:500:12`, `cycle:4..24`, `cycle:6*cycle:6`.
        #[arg(long)]
        population: Option<String>,
        /// Disable the worker pool.
        #[arg(long)]
        sequential: bool,
    },
    /// Build a product and report its AD spectrum.
    Product {
        #[arg(long, value_parser = ["join", "lex", "cartesian"])]
        kind: String,
        /// First factor: family or edge-list file.
        #[arg(long)]
        g: String,
        /// Second factor: family or edge-list file.
        #[arg(long)]
        h: String,
        /// Compare against the closed-form spectrum.
        #[arg(long)]
        check: bool,
    },
    /// Print or write the graphs of a population as edge lists.
    Gen {
        population: String,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
