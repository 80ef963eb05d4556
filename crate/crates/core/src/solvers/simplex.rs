//! Exact phase-one simplex for `A x <= b` with free variables.
//!
//! Dense tableau over [`Rational`] with Bland's rule, which cannot cycle.

use crate::numerics::Rational;

/// Rows of `coeffs . x <= rhs` over `vars` free variables.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    pub vars: usize,
    pub rows: Vec<(Vec<Rational>, Rational)>,
}

impl LinearSystem {
    pub fn new(vars: usize) -> Self {
        LinearSystem { vars, rows: Vec::new() }
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.vars);
        self.rows.push((coeffs, rhs));
    }
}

/// Some `x` with `A x <= b`, or `None` when the system is infeasible.
pub fn feasible_point(system: &LinearSystem) -> Option<Vec<Rational>> {
    let n = system.vars;
    let m = system.rows.len();
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }
    // columns: u (n), v (n), slack (m), artificial (one per negative rhs)
    let negative: Vec<usize> = (0..m).filter(|&i| system.rows[i].1.is_negative()).collect();
    let art_of: Vec<Option<usize>> = {
        let mut k = 0;
        (0..m)
            .map(|i| {
                if system.rows[i].1.is_negative() {
                    k += 1;
                    Some(2 * n + m + k - 1)
                } else {
                    None
                }
            })
            .collect()
    };
    let cols = 2 * n + m + negative.len();
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    for (i, (a, b)) in system.rows.iter().enumerate() {
        let mut row = vec![Rational::zero(); cols];
        for j in 0..n {
            row[j] = a[j].clone();
            row[n + j] = -&a[j];
        }
        row[2 * n + i] = Rational::one();
        let mut b = b.clone();
        if let Some(art) = art_of[i] {
            for x in row.iter_mut() {
                *x = -&*x;
            }
            b = -b;
            row[art] = Rational::one();
            basis.push(art);
        } else {
            basis.push(2 * n + i);
        }
        t.push(row);
        rhs.push(b);
    }
    let is_art = |c: usize| c >= 2 * n + m;
    // reduced costs of the phase-one objective: sum of artificials
    let mut reduced: Vec<Rational> = (0..cols).map(|c| if is_art(c) { Rational::one() } else { Rational::zero() }).collect();
    for (i, &bv) in basis.iter().enumerate() {
        if is_art(bv) {
            for c in 0..cols {
                reduced[c] -= &t[i][c];
            }
        }
    }

    while let Some(enter) = (0..cols).find(|&c| reduced[c].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &rhs[i] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so a leaving row always exists
        let (r, _) = leave.expect("phase-one objective is bounded");
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x = &*x / &piv;
        }
        rhs[r] = &rhs[r] / &piv;
        let pivot_row = t[r].clone();
        let pivot_rhs = rhs[r].clone();
        for i in 0..m {
            if i != r && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for c in 0..cols {
                    if !pivot_row[c].is_zero() {
                        let delta = &f * &pivot_row[c];
                        t[i][c] -= &delta;
                    }
                }
                rhs[i] -= &(&f * &pivot_rhs);
            }
        }
        let f = reduced[enter].clone();
        for c in 0..cols {
            if !pivot_row[c].is_zero() {
                let delta = &f * &pivot_row[c];
                reduced[c] -= &delta;
            }
        }
        basis[r] = enter;
    }

    // leftover artificial weight means the original rows cannot all hold
    if (0..m).any(|i| is_art(basis[i]) && !rhs[i].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] += &rhs[i];
        } else if bv < 2 * n {
            x[bv - n] -= &rhs[i];
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn check(sys: &LinearSystem, x: &[Rational]) -> bool {
        sys.rows.iter().all(|(a, b)| a.iter().zip(x).map(|(p, q)| p * q).sum::<Rational>() <= *b)
    }

    #[test]
    fn box_constraints() {
        let mut s = LinearSystem::new(2);
        s.push(vec![r("1"), r("0")], r("-1"));
        s.push(vec![r("-1"), r("0")], r("3"));
        s.push(vec![r("0"), r("-1")], r("-5/2"));
        let x = feasible_point(&s).unwrap();
        assert!(check(&s, &x));
    }

    #[test]
    fn contradictory_bounds() {
        let mut s = LinearSystem::new(1);
        s.push(vec![r("1")], r("1"));
        s.push(vec![r("-1")], r("-2"));
        assert!(feasible_point(&s).is_none());
    }

    #[test]
    fn degenerate_rows_do_not_cycle() {
        let mut s = LinearSystem::new(3);
        for i in 0..6 {
            let a = vec![Rational::from(i as i64 - 2), Rational::from(1i64), Rational::from((i % 3) as i64 - 1)];
            s.push(a, Rational::zero());
        }
        s.push(vec![r("0"), r("-1"), r("0")], r("-1"));
        if let Some(x) = feasible_point(&s) {
            assert!(check(&s, &x));
        }
    }
}
