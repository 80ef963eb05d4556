use std::fs::OpenOptions;
use std::path::Path;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::instance::{InstanceFile, PointEntry};
use super::pipeline::solve_instance;
use crate::error::{Error, Result};
use crate::gadgets::Problem;
use crate::geometry::Color;
use crate::numerics::Rational;
use crate::solvers::Solver;

pub const BENCH_HEADER: [&str; 5] = ["problem", "d", "n_points", "candidates_evaluated", "elapsed_ms"];

const SKIPPED: &str = "skipped";

/// Coordinates are multiples of `1/GRID` strictly inside the unit cube.
const GRID: i64 = 1 << 16;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub problem: Problem,
    pub d: usize,
    pub n_points: usize,
    /// `None` when the projected work exceeded the cutoff.
    pub candidates_evaluated: Option<u64>,
    pub elapsed_ms: Option<f64>,
}

impl BenchRow {
    fn record(&self) -> [String; 5] {
        [
            self.problem.to_string(),
            self.d.to_string(),
            self.n_points.to_string(),
            self.candidates_evaluated.map_or(SKIPPED.into(), |c| c.to_string()),
            self.elapsed_ms.map_or(SKIPPED.into(), |t| format!("{t:.3}")),
        ]
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BenchConfig {
    pub seed: u64,
    /// Largest projected candidate count that is still run.
    pub cutoff: u128,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig { seed: 0x5eed, cutoff: 50_000_000 }
    }
}

/// Worst-case candidate count of the plain enumeration the solver prunes.
fn projected(problem: Problem, d: usize, n: usize) -> u128 {
    let n = n as u128;
    let per_axis = match problem {
        Problem::StarDisc | Problem::EmptyStar => n + 1,
        Problem::BoxDisc | Problem::EmptyBox => (n + 2) * (n + 1) / 2,
        Problem::BichromaticBox | Problem::RedblueDisc => n * (n + 1) / 2,
        _ => return 1u128.checked_shl(n as u32).unwrap_or(u128::MAX),
    };
    (0..d).try_fold(1u128, |acc, _| acc.checked_mul(per_axis)).unwrap_or(u128::MAX)
}

fn random_instance(problem: Problem, d: usize, n: usize, rng: &mut ChaCha8Rng) -> InstanceFile {
    let colored = matches!(problem, Problem::BichromaticBox | Problem::RedblueDisc | Problem::HalfspaceBichromatic);
    let points = (0..n)
        .map(|i| PointEntry {
            coords: (0..d).map(|_| Rational::new(rng.random_range(1..GRID), GRID).expect("GRID > 0")).collect(),
            // first point blue so the bichromatic solvers always have a target
            color: colored.then(|| if i == 0 || rng.random_bool(0.5) { Color::Blue } else { Color::Red }),
            weight: 1,
            in_subset: None,
        })
        .collect();
    InstanceFile { dim: d, problem, params: None, expected_positive: None, expected_negative: None, points }
}

/// Times the solver on seeded random instances for every `(d, n)` pair.
/// Each measured run follows one untimed warm-up run.
pub fn bench_scaling(problem: Problem, dims: &[usize], sizes: &[usize], config: BenchConfig) -> Result<Vec<BenchRow>> {
    if matches!(problem, Problem::NetBox | Problem::NetHalfspace) {
        return Err(Error::InvalidParameter(format!("no benchmark for {problem}")));
    }
    let solver = Solver::with_threads(1);
    let mut rows = Vec::new();
    for &d in dims {
        for &n in sizes {
            let mut row = BenchRow { problem, d, n_points: n, candidates_evaluated: None, elapsed_ms: None };
            if d == 0 || n == 0 {
                return Err(Error::InvalidParameter("dimensions and sizes must be positive".into()));
            }
            if projected(problem, d, n) <= config.cutoff {
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ ((d as u64) << 32) ^ n as u64);
                let inst = random_instance(problem, d, n, &mut rng);
                solve_instance(&inst, problem, &solver, None)?;
                let start = Instant::now();
                let out = solve_instance(&inst, problem, &solver, None)?;
                row.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
                row.candidates_evaluated = Some(out.candidates_evaluated);
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Appends rows to a CSV file, writing the header first if the file is new
/// or empty.
pub fn write_bench_rows(path: &Path, rows: &[BenchRow]) -> Result<()> {
    let fresh = std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut w = csv::Writer::from_writer(file);
    let csv_err = |e: csv::Error| Error::Io(e.to_string());
    if fresh {
        w.write_record(BENCH_HEADER).map_err(csv_err)?;
    }
    for r in rows {
        w.write_record(r.record()).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}
