//! Complete exact solvers.
//!
//! Every solver enumerates a finite candidate family that provably contains
//! an optimal range:
//!
//! * Anchored continuous problems: any anchored box can be shrunk (excess
//!   side, closed) to the largest coordinates of its points, or grown
//!   (deficit side, open) face by face to the next point coordinate or to 1.
//!   Corners from the critical grid with the sentinel 1 therefore suffice.
//! * Unanchored continuous problems: the same argument per face, with lower
//!   faces drawn from the grid plus 0.
//! * Bichromatic and red-blue boxes: shrinking a box to the bounding box of
//!   its majority-color points keeps that color's count and never adds a
//!   point of the other color, so faces on majority-color coordinates suffice.
//! * Half-spaces: subset enumeration with an exact linear feasibility test
//!   is complete by definition.
//!
//! Work is split into partitions over the first axis. Each partition is
//! searched independently and the results are merged in partition order
//! (maximum value, earliest partition on ties), so the witness and the
//! candidate count do not depend on the number of worker threads.

mod combinatorial;
mod continuous;
mod halfspace;
mod mask;
mod net;
mod simplex;

use std::time::Duration;

use rayon::prelude::*;

use crate::geometry::Range;
use crate::numerics::Rational;

pub use combinatorial::{solve_bichromatic_box, solve_redblue_box_discrepancy};
pub use continuous::{solve_box_discrepancy, solve_max_empty_box, solve_max_empty_star, solve_star_discrepancy};
pub use halfspace::{max_bichromatic_halfspace, solve_bichromatic_halfspace};
pub use net::{verify_epsilon_net, NetFamily, NetReport};
pub use simplex::{feasible_point, LinearSystem};

/// Environment variable overriding the default worker count.
pub const THREADS_ENV: &str = "GEODISC_THREADS";

/// Which way the optimum deviates.
///
/// For continuous discrepancy, `Excess` means more points than volume (closed
/// range) and `Deficit` more volume than points (open range). For red-blue
/// discrepancy, `Excess` means blue majority and `Deficit` red majority.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Excess,
    Deficit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub value: Rational,
    pub witness: Range,
    pub side: Side,
    pub candidates_evaluated: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BichromaticReport {
    /// Blue weight inside the witness.
    pub value: u64,
    pub witness: Option<Range>,
    pub feasible: bool,
    pub candidates_evaluated: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmptyBoxReport {
    pub volume: Rational,
    pub witness: Range,
    pub candidates_evaluated: u64,
    pub elapsed: Duration,
}

/// Worker configuration shared by all solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Solver {
    threads: usize,
}

impl Default for Solver {
    /// Reads the worker count from [`THREADS_ENV`], else uses the available
    /// parallelism.
    fn default() -> Self {
        let threads = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&t| t > 0)
            .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
        Solver { threads }
    }
}

impl Solver {
    pub fn with_threads(threads: usize) -> Self {
        Solver { threads: threads.max(1) }
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    /// Runs `f` over `0..count` and returns the results in index order.
    pub(crate) fn run_partitions<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        if self.threads <= 1 || count <= 1 {
            return (0..count).map(f).collect();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.threads).build() {
            Ok(pool) => pool.install(|| (0..count).into_par_iter().map(&f).collect()),
            Err(_) => (0..count).map(f).collect(),
        }
    }
}

/// Keeps the first strictly best entry.
pub(crate) fn merge_best<T, K: PartialOrd>(items: impl IntoIterator<Item = T>, key: impl Fn(&T) -> Option<K>) -> Option<T> {
    let mut best: Option<(K, T)> = None;
    for item in items {
        if let Some(k) = key(&item) {
            if best.as_ref().is_none_or(|(bk, _)| k > *bk) {
                best = Some((k, item));
            }
        }
    }
    best.map(|(_, t)| t)
}
