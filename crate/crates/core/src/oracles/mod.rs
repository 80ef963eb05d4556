//! Brute-force reference implementations.
//!
//! Nothing here shares code with [`crate::solvers`]. The range enumerator
//! rescales the instance onto an integer lattice and checks every grid box
//! under both closures by a fresh linear scan. Half-space separability is
//! decided by Fourier-Motzkin elimination, while the solver uses simplex.

mod enumerate;
mod separation;

pub use enumerate::{naive_range_enumerate, NaiveProblem};
pub use separation::separable_subset;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gadgets::Graph;

/// Exhaustive k-clique test over all k-subsets of vertices.
pub fn has_clique(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!("clique size {k} outside 1..={}", g.n())));
    }
    Ok((1..=g.n()).combinations(k).any(|s| s.iter().tuple_combinations().all(|(&u, &v)| g.has_edge(u, v))))
}
