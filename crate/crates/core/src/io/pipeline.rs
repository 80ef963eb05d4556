use std::fmt;
use std::time::Duration;

use serde_json::json;

use super::instance::InstanceFile;
use crate::error::{Error, Result};
use crate::gadgets::{build_gadget, Expected, Graph, Problem};
use crate::geometry::Range;
use crate::numerics::Rational;
use crate::oracles::has_clique;
use crate::solvers::{NetFamily, Side, Solver};

/// Result of running the solver that matches a problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub problem: Problem,
    /// Optimum: a weight for combinatorial problems, an exact rational for
    /// continuous ones. For net problems, the violation threshold.
    pub value: Expected,
    /// Half-space threshold queries: feasibility. Net problems: whether the
    /// subset is a net.
    pub decision: Option<bool>,
    pub side: Option<Side>,
    pub witness: Option<Range>,
    pub candidates_evaluated: u64,
    pub elapsed: Duration,
}

impl Outcome {
    /// First line printed by `solve`.
    pub fn headline(&self) -> String {
        match (self.problem, self.decision) {
            (Problem::NetBox | Problem::NetHalfspace, Some(true)) => "net".into(),
            (Problem::NetBox | Problem::NetHalfspace, _) => "not a net".into(),
            (_, Some(false)) => "infeasible".into(),
            _ => self.value.to_string(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "problem": self.problem,
            "value": self.value,
            "witness": self.witness.as_ref().map(|w| w.to_string()),
            "candidates_evaluated": self.candidates_evaluated,
            "elapsed_ms": self.elapsed.as_secs_f64() * 1e3,
        });
        if let Some(d) = self.decision {
            let key = if matches!(self.problem, Problem::NetBox | Problem::NetHalfspace) { "is_net" } else { "feasible" };
            v[key] = json!(d);
        }
        if let Some(s) = self.side {
            v["side"] = json!(s);
        }
        v
    }
}

/// Runs the solver for `problem` on the instance. `threshold` selects the
/// half-space decision version; without it the maximum is computed.
pub fn solve_instance(file: &InstanceFile, problem: Problem, solver: &Solver, threshold: Option<u64>) -> Result<Outcome> {
    let ps = file.point_set()?;
    let base = |value, witness, evaluated, elapsed| Outcome {
        problem,
        value,
        decision: None,
        side: None,
        witness,
        candidates_evaluated: evaluated,
        elapsed,
    };
    let out = match problem {
        Problem::BichromaticBox => {
            let r = solver.bichromatic_box(&ps, false)?;
            base(Expected::Count(r.value), r.witness, r.candidates_evaluated, r.elapsed)
        }
        Problem::RedblueDisc => {
            let r = solver.redblue_box_discrepancy(&ps)?;
            let count = r.value.to_u64().ok_or_else(|| Error::Invariant(format!("non-integral red-blue value {}", r.value)))?;
            Outcome { side: Some(r.side), ..base(Expected::Count(count), Some(r.witness), r.candidates_evaluated, r.elapsed) }
        }
        Problem::EmptyStar | Problem::EmptyBox => {
            let r = if problem == Problem::EmptyStar { solver.max_empty_star(&ps)? } else { solver.max_empty_box(&ps)? };
            base(Expected::Value(r.volume), Some(r.witness), r.candidates_evaluated, r.elapsed)
        }
        Problem::StarDisc | Problem::BoxDisc => {
            let r = if problem == Problem::StarDisc { solver.star_discrepancy(&ps)? } else { solver.box_discrepancy(&ps)? };
            Outcome { side: Some(r.side), ..base(Expected::Value(r.value), Some(r.witness), r.candidates_evaluated, r.elapsed) }
        }
        Problem::HalfspaceBichromatic => {
            let r = match threshold {
                Some(m) => solver.bichromatic_halfspace(&ps, m)?,
                None => solver.max_bichromatic_halfspace(&ps)?,
            };
            let decision = threshold.map(|_| r.feasible);
            Outcome { decision, ..base(Expected::Count(r.value), r.witness, r.candidates_evaluated, r.elapsed) }
        }
        Problem::NetBox | Problem::NetHalfspace => {
            let subset = file.subset().unwrap_or_else(|| vec![false; ps.len()]);
            let eps = file
                .params
                .as_ref()
                .and_then(|p| p.eps.clone())
                .ok_or_else(|| Error::InstanceFormat("net instance needs params.eps".into()))?;
            let family = if problem == Problem::NetBox { NetFamily::Box } else { NetFamily::HalfSpace };
            let start = std::time::Instant::now();
            let r = solver.verify_epsilon_net(&ps, &subset, &eps, family)?;
            Outcome {
                decision: Some(r.is_net),
                ..base(Expected::Count(r.threshold), r.violator, 0, start.elapsed())
            }
        }
    };
    Ok(out)
}

/// Outcome of the graph-to-gadget-to-solver check.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub problem: Problem,
    pub has_clique: bool,
    pub outcome: Outcome,
    /// What the solver had to return given the clique answer.
    pub expected: String,
    /// Failed checks; empty when everything matches.
    pub mismatches: Vec<String>,
}

impl Verdict {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "problem: {}", self.problem)?;
        writeln!(f, "clique: {}", if self.has_clique { "yes" } else { "no" })?;
        writeln!(f, "expected: {}", self.expected)?;
        writeln!(f, "solver: {}", self.outcome.headline())?;
        if self.matches() {
            write!(f, "result: match")
        } else {
            writeln!(f, "result: MISMATCH")?;
            for m in &self.mismatches {
                writeln!(f, "  - {m}")?;
            }
            Ok(())
        }
    }
}

/// Builds the gadget for `g`, passes it through the file format, recomputes
/// its parameters, solves it and compares against the clique oracle.
pub fn verify_gadget(problem: Problem, g: &Graph, k: usize, mu: Option<&Rational>, solver: &Solver) -> Result<Verdict> {
    let default_mu = Rational::from(2i64);
    let mu = mu.or((problem == Problem::EmptyStar).then_some(&default_mu));
    let built = build_gadget(problem, g, k, mu, true)?;
    let file = InstanceFile::from_json(&InstanceFile::from_gadget(&built).to_json())?;
    let gadget = file.to_gadget()?;
    let mut mismatches = Vec::new();

    let p = &gadget.params;
    if p.N != built.params.N {
        mismatches.push(format!("N: file says {}, points weigh {}", built.params.N, p.N));
    }
    if p.k != k || p.n != g.n() || gadget.points.dim() != 2 * k {
        mismatches.push(format!("shape: k={}, n={}, dim={}", p.k, p.n, gadget.points.dim()));
    }
    if let Some(mu) = &p.mu {
        let c = mu.recip()?.pow((g.n() - 1) as u32);
        let v = c.pow(k as u32);
        if p.C.as_ref() != Some(&c) || p.V.as_ref() != Some(&v) {
            mismatches.push(format!("C/V: file has {:?}/{:?}, mu gives {c}/{v}", p.C, p.V));
        }
    }

    let clique = k <= g.n() && has_clique(g, k)?;
    let threshold = (problem == Problem::HalfspaceBichromatic).then_some(k as u64 + 1);
    let outcome = solve_instance(&file, problem, solver, threshold)?;
    let positive = &gadget.expected_positive;

    let (expected, ok) = match problem {
        Problem::HalfspaceBichromatic => {
            let want = clique;
            (if want { "feasible" } else { "infeasible" }.to_string(), outcome.decision == Some(want))
        }
        Problem::NetBox | Problem::NetHalfspace => {
            let want = !clique;
            (if want { "net" } else { "not a net" }.to_string(), outcome.decision == Some(want))
        }
        _ if clique => (positive.to_string(), outcome.value == *positive),
        // Only the bound is guaranteed: the optimum is C^k/mu^(k - clique number).
        Problem::EmptyStar | Problem::EmptyBox => {
            let neg = gadget.expected_negative.clone().ok_or_else(|| Error::InstanceFormat("missing expected_negative".into()))?;
            let ok = matches!(&outcome.value, Expected::Value(v) if *v <= neg);
            (format!("at most {neg}"), ok)
        }
        _ => {
            let ok = match (&outcome.value, positive) {
                (Expected::Count(a), Expected::Count(b)) => a < b,
                (Expected::Value(a), Expected::Value(b)) => a < b,
                _ => false,
            };
            (format!("below {positive}"), ok)
        }
    };
    if !ok {
        mismatches.push(format!("value: expected {expected}, solver returned {}", outcome.headline()));
    }
    Ok(Verdict { problem, has_clique: clique, outcome, expected, mismatches })
}
