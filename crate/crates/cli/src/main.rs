//! `ccwidth`: clique cover width, decompositions and induced-star bounds
//! from the command line. Every run prints a JSON report on stdout.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Context;

#[derive(Parser)]
#[command(name = "ccwidth", version, about = "Clique cover width toolkit")]
struct Cli {
    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    /// Override the vertex limit of the exact searches.
    #[arg(long, global = true, value_name = "N")]
    limits_n: Option<usize>,
    /// Override the time budget of the exact searches, in milliseconds.
    #[arg(long, global = true, value_name = "MS")]
    limits_time: Option<u64>,
    /// Seed for the generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Directory for witness files.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    EdgeList,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Parse a graph and print basic facts, or convert it with --emit.
    Parse {
        input: PathBuf,
        /// Print the graph in this format instead of a report.
        #[arg(long, value_enum)]
        emit: Option<EmitFormat>,
    },
    /// Clique cover width, exactly or by the greedy 2-approximation.
    Ccw(CcwArgs),
    /// Split a graph into unit incomparability factors along a cover.
    Decompose(DecomposeArgs),
    /// Check witness files against a graph.
    Verify(VerifyArgs),
    /// Largest induced star with a certificate.
    Star { input: PathBuf },
    /// Generate a seeded instance.
    Gen(GenArgs),
    /// Ramsey-number lookup and induced-star bounds.
    Ramsey(RamseyArgs),
    /// Size, degree and component statistics.
    Stats { input: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmitFormat {
    EdgeList,
    Json,
    Dot,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["exact", "greedy"]))]
pub struct CcwArgs {
    pub input: PathBuf,
    /// Exhaustive search (small graphs).
    #[arg(long)]
    pub exact: bool,
    /// Layered greedy cover of an incomparability graph.
    #[arg(long)]
    pub greedy: bool,
    /// Transitive orientation of the complement (JSON); searched for when absent.
    #[arg(long, value_name = "FILE", requires = "greedy")]
    pub orientation: Option<PathBuf>,
    /// Trust the orientation to be transitive.
    #[arg(long, requires = "orientation")]
    pub assume_transitive: bool,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["cover", "auto"]))]
pub struct DecomposeArgs {
    pub input: PathBuf,
    /// Ordered clique cover (JSON `{"parts": [...]}`).
    #[arg(long, value_name = "FILE")]
    pub cover: Option<PathBuf>,
    /// Use an optimal cover when the exact search is within limits, else a
    /// greedy or trivial one.
    #[arg(long)]
    pub auto: bool,
    /// Run the five structural checks on the result.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("witness").required(true).multiple(true)
    .args(["decomposition", "cover", "star", "orientation"]))]
pub struct VerifyArgs {
    pub input: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub decomposition: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub cover: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub star: Option<PathBuf>,
    /// Transitive orientation of the complement.
    #[arg(long, value_name = "FILE")]
    pub orientation: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Poset,
    Cobipartite,
    Grid,
    Star,
    Random,
}

#[derive(Args)]
pub struct GenArgs {
    pub kind: GenKind,
    /// Vertices (poset, cobipartite, random), side length (grid) or leaves (star).
    pub n: usize,
    /// Edge or comparability probability.
    #[arg(default_value_t = 0.5)]
    pub density: f64,
    /// Overrides --seed.
    #[arg(value_name = "SEED")]
    pub seed_override: Option<u64>,
    /// Output format for the graph file.
    #[arg(long, value_enum, default_value_t = EmitFormat::EdgeList)]
    pub emit: EmitFormat,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("query").required(true).args(["targets", "corollary"]))]
pub struct RamseyArgs {
    /// Clique sizes, one per colour.
    pub targets: Vec<usize>,
    /// Bound on s(G) for graphs of this clique cover width.
    #[arg(long, value_name = "CCW")]
    pub corollary: Option<usize>,
    /// Confirm the value by exhaustive colouring search where feasible.
    #[arg(long)]
    pub verify: bool,
    /// Ramsey table to use instead of the bundled one.
    #[arg(long, value_name = "FILE")]
    pub table: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let mut ctx = Context::new(cli.out, cli.seed, cli.limits_n, cli.limits_time);
    match commands::run(&mut ctx, cli.format, cli.command) {
        Ok(commands::Printed::Raw(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(commands::Printed::Report(outcome)) => {
            let report = ctx.finish(echo, outcome.results);
            print!("{}", report::to_json(&report));
            for n in &report.notices {
                eprintln!("note: {n}");
            }
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
