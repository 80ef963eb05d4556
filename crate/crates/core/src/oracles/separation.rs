use std::collections::HashSet;

use crate::geometry::Point;
use crate::numerics::Rational;

/// `coeffs . x <= rhs`
#[derive(Clone, PartialEq, Eq, Hash)]
struct Ineq {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl Ineq {
    /// Positive rescaling so the first nonzero coefficient is +-1.
    fn normalized(mut self) -> Ineq {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(Rational::abs) {
            for c in &mut self.coeffs {
                *c = &*c / &lead;
            }
            self.rhs = &self.rhs / &lead;
        }
        self
    }
}

/// True iff some closed half-space contains every blue and no red.
///
/// Decides `exists (a, c): a.b <= c for all blues, a.r >= c + 1 for all reds`
/// by Fourier-Motzkin elimination over exact rationals. Strict separation of
/// finite sets is equivalent to the margin-1 system after rescaling.
pub fn separable_subset(blues: &[Point], reds: &[Point]) -> bool {
    if blues.is_empty() || reds.is_empty() {
        return true;
    }
    let d = blues[0].dim();
    // variables: a_0..a_{d-1}, c
    let mut system: Vec<Ineq> = Vec::new();
    for b in blues {
        let mut coeffs = b.0.clone();
        coeffs.push(Rational::from(-1i64));
        system.push(Ineq { coeffs, rhs: Rational::zero() });
    }
    for r in reds {
        let mut coeffs: Vec<Rational> = r.0.iter().map(|x| -x).collect();
        coeffs.push(Rational::one());
        system.push(Ineq { coeffs, rhs: Rational::from(-1i64) });
    }

    for var in (0..=d).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for q in system {
            let c = &q.coeffs[var];
            if c.is_positive() {
                pos.push(q);
            } else if c.is_negative() {
                neg.push(q);
            } else {
                rest.push(q);
            }
        }
        let mut seen: HashSet<Ineq> = HashSet::new();
        let mut next = Vec::new();
        let mut keep = |q: Ineq, next: &mut Vec<Ineq>| -> bool {
            let q = q.normalized();
            if q.coeffs.iter().all(Rational::is_zero) {
                // 0 <= rhs
                return !q.rhs.is_negative();
            }
            if seen.insert(q.clone()) {
                next.push(q);
            }
            true
        };
        for q in rest {
            if !keep(q, &mut next) {
                return false;
            }
        }
        for p in &pos {
            for n in &neg {
                let sp = p.coeffs[var].clone();
                let sn = -&n.coeffs[var];
                let coeffs: Vec<Rational> =
                    p.coeffs.iter().zip(&n.coeffs).map(|(x, y)| x * &sn + y * &sp).collect();
                let rhs = &p.rhs * &sn + &n.rhs * &sp;
                if !keep(Ineq { coeffs, rhs }, &mut next) {
                    return false;
                }
            }
        }
        system = next;
    }
    system.iter().all(|q| !q.rhs.is_negative())
}
