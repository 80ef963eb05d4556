//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::gadgets::{build_gadget, Problem};
use crate::io::{bench_scaling, parse_graph, read_instance, verify_gadget, write_bench_rows, write_instance, BenchConfig, InstanceFile};
use crate::numerics::Rational;
use crate::solvers::Solver;

#[derive(Parser, Debug)]
#[command(name = "geodisc", version, about = "Exact discrepancy, empty-box and separation solvers with Clique-reduction gadgets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a reduction instance from a graph file.
    Gadget {
        #[arg(long = "type", value_parser = parse_problem)]
        problem: Problem,
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        /// Staircase base for the empty-star gadget.
        #[arg(long, value_parser = parse_rational)]
        mu: Option<Rational>,
        /// Keep integer coordinates for the bichromatic gadget.
        #[arg(long)]
        raw: bool,
        #[arg(short)]
        o: PathBuf,
    },
    /// Solve an instance file exactly.
    Solve {
        #[arg(long, value_parser = parse_problem)]
        problem: Problem,
        instance: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Half-space problems: decide whether this blue weight is reachable.
        #[arg(long)]
        m: Option<u64>,
    },
    /// Check a gadget end to end against the clique oracle.
    Verify {
        #[arg(long = "type", value_parser = parse_problem)]
        problem: Problem,
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, value_parser = parse_rational)]
        mu: Option<Rational>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Time the solver on random instances and append CSV rows.
    Bench {
        #[arg(long, value_parser = parse_problem)]
        problem: Problem,
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(short)]
        o: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        /// Skip runs whose projected candidate count exceeds this.
        #[arg(long)]
        cutoff: Option<u128>,
    },
}

fn parse_problem(s: &str) -> std::result::Result<Problem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn solver(threads: Option<usize>) -> Solver {
    threads.map(Solver::with_threads).unwrap_or_default()
}

fn read_graph(path: &PathBuf) -> Result<crate::gadgets::Graph> {
    parse_graph(&std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?)
}

/// Runs the command line and returns the process exit code: 0 on success,
/// 1 when `verify` finds a mismatch, 2 on usage, input or solver errors.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gadget { problem, graph, k, mu, raw, o } => {
            let g = read_graph(&graph)?;
            let gadget = build_gadget(problem, &g, k, mu.as_ref(), !raw)?;
            write_instance(&o, &InstanceFile::from_gadget(&gadget))?;
            writeln!(
                out,
                "wrote {} points (dim {}, total weight {}) to {}",
                gadget.points.len(),
                gadget.points.dim(),
                gadget.params.N,
                o.display()
            )?;
            Ok(0)
        }
        Command::Solve { problem, instance, threads, json, m } => {
            let file = read_instance(&instance)?;
            let outcome = crate::io::solve_instance(&file, problem, &solver(threads), m)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&outcome.to_json()).expect("json value"))?;
            } else {
                writeln!(out, "{}", outcome.headline())?;
                match &outcome.witness {
                    Some(w) => writeln!(out, "witness: {w}")?,
                    None => writeln!(out, "witness: none")?,
                }
                if let Some(side) = outcome.side {
                    writeln!(out, "side: {}", serde_json::to_value(side).expect("side").as_str().unwrap_or_default())?;
                }
                writeln!(out, "candidates evaluated: {}", outcome.candidates_evaluated)?;
            }
            Ok(0)
        }
        Command::Verify { problem, graph, k, mu, threads } => {
            let g = read_graph(&graph)?;
            let verdict = verify_gadget(problem, &g, k, mu.as_ref(), &solver(threads))?;
            writeln!(out, "{verdict}")?;
            Ok(if verdict.matches() { 0 } else { 1 })
        }
        Command::Bench { problem, dims, sizes, o, seed, cutoff } => {
            let mut config = BenchConfig::default();
            if let Some(s) = seed {
                config.seed = s;
            }
            if let Some(c) = cutoff {
                config.cutoff = c;
            }
            let rows = bench_scaling(problem, &dims, &sizes, config)?;
            write_bench_rows(&o, &rows)?;
            writeln!(out, "appended {} rows to {}", rows.len(), o.display())?;
            Ok(0)
        }
    }
}
