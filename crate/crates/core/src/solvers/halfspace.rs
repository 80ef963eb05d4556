//! Red-free closed half-spaces holding a target blue weight.

use std::time::Instant;

use super::simplex::{feasible_point, LinearSystem};
use super::{BichromaticReport, Solver};
use crate::error::{Error, Result};
use crate::geometry::{Color, HalfSpace, Point, PointSet, Range};
use crate::numerics::Rational;

pub fn solve_bichromatic_halfspace(ps: &PointSet, m: u64) -> Result<BichromaticReport> {
    Solver::default().bichromatic_halfspace(ps, m)
}

pub fn max_bichromatic_halfspace(ps: &PointSet) -> Result<BichromaticReport> {
    Solver::default().max_bichromatic_halfspace(ps)
}

/// Margin-one separation system in the unknowns `(a, c)`:
/// `a.b - c <= 0` for the chosen blues and `c - a.r <= -1` for every red.
fn separation_system(d: usize, blues: &[&Point], reds: &[&Point]) -> LinearSystem {
    let mut sys = LinearSystem::new(d + 1);
    for b in blues {
        let mut row = b.0.clone();
        row.push(Rational::from(-1i64));
        sys.push(row, Rational::zero());
    }
    for r in reds {
        let mut row: Vec<Rational> = r.0.iter().map(|x| -x).collect();
        row.push(Rational::one());
        sys.push(row, Rational::from(-1i64));
    }
    sys
}

/// Turns an LP solution into a half-space with a nonzero normal. A zero
/// normal means "everything" (no reds) or "nothing" (no blues chosen); both
/// are replaced by an equivalent axis-aligned half-space.
fn to_halfspace(ps: &PointSet, sol: &[Rational]) -> HalfSpace {
    let d = ps.dim();
    let (a, c) = sol.split_at(d);
    let c = c[0].clone();
    if a.iter().any(|x| !x.is_zero()) {
        return HalfSpace { normal: a.to_vec(), offset: c };
    }
    let mut normal = vec![Rational::zero(); d];
    normal[0] = Rational::one();
    let xs = ps.iter().map(|p| p.point[0].clone());
    let offset = if c.is_negative() {
        xs.min().unwrap_or_else(Rational::zero) - Rational::one()
    } else {
        xs.max().unwrap_or_else(Rational::zero)
    };
    HalfSpace { normal, offset }
}

struct Growth<'a> {
    d: usize,
    blues: &'a [(&'a Point, u64)],
    reds: &'a [&'a Point],
    m: u64,
}

impl Growth<'_> {
    /// Extends the chosen prefix with blues from `from` on while it stays
    /// separable from every red.
    fn grow(&self, from: usize, chosen: &mut Vec<usize>, weight: u64, evaluated: &mut u64) -> Option<Vec<Rational>> {
        for i in from..self.blues.len() {
            chosen.push(i);
            let pts: Vec<&Point> = chosen.iter().map(|&k| self.blues[k].0).collect();
            *evaluated += 1;
            if let Some(sol) = feasible_point(&separation_system(self.d, &pts, self.reds)) {
                let w = weight + self.blues[i].1;
                if w >= self.m {
                    return Some(sol);
                }
                if let Some(found) = self.grow(i + 1, chosen, w, evaluated) {
                    return Some(found);
                }
            }
            chosen.pop();
        }
        None
    }
}

impl Solver {
    /// Decides whether some closed half-space holds blue weight at least `m`
    /// and no red weight.
    ///
    /// Blue points are added in index order, depth first; a prefix that is
    /// already inseparable from the reds is abandoned, since adding blues
    /// never makes separation easier. Every subset of at most `m` blue
    /// entries is reachable, so the search is complete.
    pub fn bichromatic_halfspace(&self, ps: &PointSet, m: u64) -> Result<BichromaticReport> {
        let start = Instant::now();
        let d = ps.dim();
        let blues: Vec<(&Point, u64)> = ps.with_color(Color::Blue).map(|p| (&p.point, p.weight)).collect();
        let reds: Vec<&Point> = ps.with_color(Color::Red).map(|p| &p.point).collect();
        let total_blue: u64 = blues.iter().map(|b| b.1).sum();
        let mut evaluated = 0u64;

        let report = |sol: Option<Vec<Rational>>, evaluated: u64| -> BichromaticReport {
            match sol {
                Some(sol) => {
                    let hs = to_halfspace(ps, &sol);
                    let value = ps.with_color(Color::Blue).filter(|p| hs.contains(&p.point)).map(|p| p.weight).sum();
                    BichromaticReport {
                        value,
                        witness: Some(Range::HalfSpace(hs)),
                        feasible: true,
                        candidates_evaluated: evaluated,
                        elapsed: start.elapsed(),
                    }
                }
                None => BichromaticReport {
                    value: 0,
                    witness: None,
                    feasible: false,
                    candidates_evaluated: evaluated,
                    elapsed: start.elapsed(),
                },
            }
        };

        if m > total_blue {
            return Ok(report(None, 0));
        }
        if m == 0 {
            evaluated += 1;
            return Ok(report(feasible_point(&separation_system(d, &[], &reds)), evaluated));
        }

        let search = Growth { d, blues: &blues, reds: &reds, m };
        let sol = search.grow(0, &mut Vec::new(), 0, &mut evaluated);
        Ok(report(sol, evaluated))
    }

    /// Largest blue weight in a red-free half-space, by descending thresholds.
    pub fn max_bichromatic_halfspace(&self, ps: &PointSet) -> Result<BichromaticReport> {
        let total = ps.color_weight(Color::Blue);
        if total == 0 {
            return Err(Error::NoBluePoints);
        }
        let mut evaluated = 0;
        for m in (1..=total).rev() {
            let mut rep = self.bichromatic_halfspace(ps, m)?;
            evaluated += rep.candidates_evaluated;
            if rep.feasible {
                rep.candidates_evaluated = evaluated;
                return Ok(rep);
            }
        }
        let mut rep = self.bichromatic_halfspace(ps, total + 1)?;
        rep.candidates_evaluated = evaluated;
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colored(pts: &[(&[&str], Color)]) -> PointSet {
        let d = pts[0].0.len();
        let mut ps = PointSet::new(d).unwrap();
        for (cs, c) in pts {
            ps.push_point(Point(cs.iter().map(|x| x.parse().unwrap()).collect()), Some(*c), 1).unwrap();
        }
        ps
    }

    #[test]
    fn midpoint_red() {
        let ps = colored(&[(&["0", "0"], Color::Blue), (&["1", "1"], Color::Blue), (&["1/2", "1/2"], Color::Red)]);
        let s = Solver::with_threads(1);
        assert!(!s.bichromatic_halfspace(&ps, 2).unwrap().feasible);
        let one = s.bichromatic_halfspace(&ps, 1).unwrap();
        assert!(one.feasible);
        assert_eq!(one.value, 1);
        assert_eq!(s.max_bichromatic_halfspace(&ps).unwrap().value, 1);
    }

    #[test]
    fn no_reds_takes_everything() {
        let ps = colored(&[(&["0", "0"], Color::Blue), (&["1", "1"], Color::Blue)]);
        let rep = Solver::with_threads(1).bichromatic_halfspace(&ps, 2).unwrap();
        assert!(rep.feasible);
        assert_eq!(rep.value, 2);
        let Some(Range::HalfSpace(h)) = rep.witness else { panic!() };
        assert!(h.normal.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn threshold_above_total_is_infeasible() {
        let ps = colored(&[(&["0"], Color::Blue), (&["1"], Color::Red)]);
        let rep = Solver::with_threads(1).bichromatic_halfspace(&ps, 2).unwrap();
        assert!(!rep.feasible);
        assert_eq!(rep.witness, None);
    }

    #[test]
    fn weighted_blue_counts_fully() {
        let mut ps = PointSet::new(1).unwrap();
        ps.push_point(Point(vec![Rational::zero()]), Some(Color::Blue), 5).unwrap();
        ps.push_point(Point(vec![Rational::one()]), Some(Color::Red), 1).unwrap();
        let rep = Solver::with_threads(1).bichromatic_halfspace(&ps, 5).unwrap();
        assert!(rep.feasible);
        assert_eq!(rep.value, 5);
    }
}
