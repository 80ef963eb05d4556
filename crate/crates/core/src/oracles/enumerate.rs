use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::{Color, PointSet};
use crate::numerics::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NaiveProblem {
    StarDiscrepancy,
    BoxDiscrepancy,
    MaxEmptyStar,
    MaxEmptyBox,
    BichromaticBox,
    BichromaticStar,
    RedBlueDiscrepancy,
}

impl NaiveProblem {
    fn anchored(self) -> bool {
        matches!(self, NaiveProblem::StarDiscrepancy | NaiveProblem::MaxEmptyStar | NaiveProblem::BichromaticStar)
    }

    fn continuous(self) -> bool {
        matches!(
            self,
            NaiveProblem::StarDiscrepancy
                | NaiveProblem::BoxDiscrepancy
                | NaiveProblem::MaxEmptyStar
                | NaiveProblem::MaxEmptyBox
        )
    }
}

struct Lattice {
    scale: i128,
    coords: Vec<Vec<i128>>,
    colors: Vec<Option<Color>>,
    weights: Vec<i128>,
    axes: Vec<Vec<i128>>,
}

fn to_lattice(ps: &PointSet) -> Result<Lattice> {
    let too_big = || Error::OracleLimit("coordinates do not fit the integer lattice".into());
    let scale = ps
        .iter()
        .flat_map(|p| p.point.coords().iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scale_i = scale.to_i128().ok_or_else(too_big)?;
    let mut coords = Vec::with_capacity(ps.len());
    for p in ps.iter() {
        let row: Option<Vec<i128>> =
            p.point.coords().iter().map(|c| (c.numer() * (&scale / c.denom())).to_i128()).collect();
        coords.push(row.ok_or_else(too_big)?);
    }
    let axes = (0..ps.dim())
        .map(|j| {
            let mut a: Vec<i128> = coords.iter().map(|row| row[j]).collect();
            a.push(0);
            a.push(scale_i);
            a.sort_unstable();
            a.dedup();
            a
        })
        .collect();
    Ok(Lattice {
        scale: scale_i,
        coords,
        colors: ps.iter().map(|p| p.color).collect(),
        weights: ps.iter().map(|p| p.weight as i128).collect(),
        axes,
    })
}

#[derive(Default)]
struct Tally {
    red: i128,
    blue: i128,
    total: i128,
}

/// Exact optimum by checking every grid box, both closures, no pruning.
///
/// Soft limits: at most 12 points and `d <= 3` for unanchored problems, at
/// most 20 points and `d <= 4` for anchored ones. Larger instances are refused.
pub fn naive_range_enumerate(ps: &PointSet, problem: NaiveProblem) -> Result<Rational> {
    let d = ps.dim();
    let (max_pts, max_d) = if problem.anchored() { (20, 4) } else { (12, 3) };
    if ps.len() > max_pts || d > max_d {
        return Err(Error::OracleLimit(format!("{} points in d={d} (limit {max_pts} points, d<={max_d})", ps.len())));
    }
    if problem.continuous() {
        ps.ensure_unit_cube()?;
    } else if ps.color_weight(Color::Blue) == 0 && problem != NaiveProblem::RedBlueDiscrepancy {
        return Err(Error::NoBluePoints);
    }
    let lat = to_lattice(ps)?;
    let w_total: i128 = lat.weights.iter().sum();
    let overflow = || Error::OracleLimit("lattice volume overflows i128".into());
    let cube = (0..d).try_fold(1i128, |acc, _| acc.checked_mul(lat.scale)).ok_or_else(overflow)?;
    cube.checked_mul(w_total.max(1)).and_then(|x| x.checked_mul(4)).ok_or_else(overflow)?;

    // every candidate interval per axis: (lower, upper)
    let intervals: Vec<Vec<(i128, i128)>> = lat
        .axes
        .iter()
        .map(|axis| {
            if problem.anchored() {
                axis.iter().map(|&x| (0, x)).collect()
            } else {
                axis.iter().tuple_combinations().map(|(&a, &b)| (a, b)).chain(axis.iter().map(|&a| (a, a))).collect()
            }
        })
        .collect();

    let mut best: Option<Rational> = None;
    let mut consider = |v: Rational| {
        if best.as_ref().is_none_or(|b| v > *b) {
            best = Some(v);
        }
    };

    for choice in intervals.iter().map(|v| v.iter()).multi_cartesian_product() {
        let volume: i128 = choice.iter().map(|(a, b)| b - a).product();
        for closed in [false, true] {
            let mut t = Tally::default();
            for (i, row) in lat.coords.iter().enumerate() {
                let inside = row.iter().zip(&choice).all(|(&y, &&(a, b))| {
                    if problem.anchored() {
                        y >= 0 && if closed { y <= b } else { y < b }
                    } else if closed {
                        a <= y && y <= b
                    } else {
                        a < y && y < b
                    }
                });
                if inside {
                    t.total += lat.weights[i];
                    match lat.colors[i] {
                        Some(Color::Red) => t.red += lat.weights[i],
                        Some(Color::Blue) => t.blue += lat.weights[i],
                        None => {}
                    }
                }
            }
            match problem {
                NaiveProblem::StarDiscrepancy | NaiveProblem::BoxDiscrepancy => {
                    let num = (volume * w_total - t.total * cube).abs();
                    consider(Rational::new(num, cube * w_total)?);
                }
                NaiveProblem::MaxEmptyStar | NaiveProblem::MaxEmptyBox => {
                    if !closed && t.total == 0 {
                        consider(Rational::new(volume, cube)?);
                    }
                }
                NaiveProblem::BichromaticBox | NaiveProblem::BichromaticStar => {
                    if t.red == 0 {
                        consider(Rational::from_integer(t.blue));
                    }
                }
                NaiveProblem::RedBlueDiscrepancy => consider(Rational::from_integer((t.red - t.blue).abs())),
            }
        }
    }
    if ps.is_empty() && matches!(problem, NaiveProblem::MaxEmptyStar | NaiveProblem::MaxEmptyBox) {
        return Ok(Rational::one());
    }
    best.ok_or(Error::EmptyPointSet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Point, WeightedPoint};

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn uncolored(d: usize, pts: &[&[&str]]) -> PointSet {
        PointSet::uncolored(d, pts.iter().map(|cs| Point(cs.iter().map(|c| r(c)).collect()))).unwrap()
    }

    fn colored(d: usize, pts: &[(&[&str], Color)]) -> PointSet {
        PointSet::from_points(
            d,
            pts.iter()
                .map(|(cs, c)| WeightedPoint { point: Point(cs.iter().map(|x| r(x)).collect()), color: Some(*c), weight: 1 })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_point_values() {
        let ps = uncolored(2, &[&["1/2", "1/2"]]);
        assert_eq!(naive_range_enumerate(&ps, NaiveProblem::StarDiscrepancy).unwrap(), r("3/4"));
        assert_eq!(naive_range_enumerate(&ps, NaiveProblem::MaxEmptyBox).unwrap(), r("1/2"));
        assert_eq!(naive_range_enumerate(&ps, NaiveProblem::MaxEmptyStar).unwrap(), r("1/2"));
        assert_eq!(naive_range_enumerate(&ps, NaiveProblem::BoxDiscrepancy).unwrap(), r("1"));
    }

    #[test]
    fn one_dimensional_box_discrepancy() {
        let ps = uncolored(1, &[&["1/4"], &["3/4"]]);
        assert_eq!(naive_range_enumerate(&ps, NaiveProblem::BoxDiscrepancy).unwrap(), r("1/2"));
    }

    #[test]
    fn red_blue_degenerate_box() {
        let ps = colored(1, &[(&["1/2"], Color::Blue), (&["3/4"], Color::Red)]);
        assert_eq!(naive_range_enumerate(&ps, NaiveProblem::RedBlueDiscrepancy).unwrap(), r("1"));
        let ps = colored(1, &[(&["1/2"], Color::Blue), (&["1/2"], Color::Red)]);
        assert_eq!(naive_range_enumerate(&ps, NaiveProblem::RedBlueDiscrepancy).unwrap(), r("0"));
    }

    #[test]
    fn origin_point_mass() {
        let ps = uncolored(2, &[&["0", "0"]]);
        assert_eq!(naive_range_enumerate(&ps, NaiveProblem::StarDiscrepancy).unwrap(), r("1"));
    }

    #[test]
    fn refuses_large_instances() {
        let pts: Vec<Point> = (0..13).map(|i| Point(vec![Rational::new(i, 13).unwrap()])).collect();
        let ps = PointSet::uncolored(1, pts).unwrap();
        assert!(matches!(naive_range_enumerate(&ps, NaiveProblem::MaxEmptyBox), Err(Error::OracleLimit(_))));
        assert!(naive_range_enumerate(&ps, NaiveProblem::MaxEmptyStar).is_ok());
    }
}
