use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph { n, edges: BTreeSet::new() };
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        Graph { n, edges: (1..=n).tuple_combinations().collect() }
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Every graph on `n` vertices up to isomorphism, in a fixed order.
    ///
    /// Brute force over all `2^(n choose 2)` edge sets; meant for `n <= 5`.
    pub fn all_up_to_isomorphism(n: usize) -> Vec<Graph> {
        let slots: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
        let perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
        let index = |u: usize, v: usize| slots.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << slots.len()) {
            let canon = perms
                .iter()
                .map(|p| {
                    slots
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .fold(0u64, |acc, (_, &(u, v))| acc | 1 << index(p[u - 1], p[v - 1]))
                })
                .min()
                .unwrap_or(0);
            if seen.insert(canon) {
                let edges = slots.iter().enumerate().filter(|(i, _)| canon >> i & 1 == 1).map(|(_, &e)| e);
                out.push(Graph { n, edges: edges.collect() });
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}, E={{", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}{v}")?;
        }
        write!(f, "}})")
    }
}
