//! Instance builders that turn a graph `G` and a clique size `k` into point
//! sets whose optimum reveals whether `G` has a `k`-clique.
//!
//! Every builder works in dimension `2k`: the coordinate pair `(2i, 2i+1)` is
//! the plane of the `i`-th chosen vertex. Per-plane scaffold points encode the
//! vertex choice and kill points, which live in two planes at once, rule out
//! choosing two non-adjacent vertices (or one vertex twice).

mod graph;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use graph::Graph;

use crate::error::{Error, Result};
use crate::geometry::{Color, Point, PointSet, WeightedPoint};
use crate::numerics::Rational;
use crate::solvers::NetFamily;

/// Problem a gadget instance targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    #[serde(alias = "bichromatic")]
    BichromaticBox,
    #[serde(alias = "redblue")]
    RedblueDisc,
    #[serde(alias = "max-empty-star")]
    EmptyStar,
    StarDisc,
    #[serde(alias = "max-empty-box")]
    EmptyBox,
    BoxDisc,
    #[serde(alias = "halfspace")]
    HalfspaceBichromatic,
    NetHalfspace,
    NetBox,
}

impl Problem {
    pub const ALL: [Problem; 9] = [
        Problem::BichromaticBox,
        Problem::RedblueDisc,
        Problem::EmptyStar,
        Problem::StarDisc,
        Problem::EmptyBox,
        Problem::BoxDisc,
        Problem::HalfspaceBichromatic,
        Problem::NetHalfspace,
        Problem::NetBox,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::BichromaticBox => "bichromatic-box",
            Problem::RedblueDisc => "redblue-disc",
            Problem::EmptyStar => "empty-star",
            Problem::StarDisc => "star-disc",
            Problem::EmptyBox => "empty-box",
            Problem::BoxDisc => "box-disc",
            Problem::HalfspaceBichromatic => "halfspace-bichromatic",
            Problem::NetHalfspace => "net-halfspace",
            Problem::NetBox => "net-box",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    /// Accepts the canonical names plus a few command-line aliases.
    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "bichromatic" => Some(Problem::BichromaticBox),
            "redblue" => Some(Problem::RedblueDisc),
            "max-empty-star" => Some(Problem::EmptyStar),
            "max-empty-box" => Some(Problem::EmptyBox),
            "halfspace" => Some(Problem::HalfspaceBichromatic),
            _ => None,
        };
        alias
            .or_else(|| Problem::ALL.into_iter().find(|p| p.name() == s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown problem '{s}'")))
    }
}

/// Optimum the solver must reach exactly when the graph has a `k`-clique.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Expected {
    Count(u64),
    Value(Rational),
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Count(c) => write!(f, "{c}"),
            Expected::Value(v) => write!(f, "{v}"),
        }
    }
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetParams {
    pub k: usize,
    pub n: usize,
    /// Total point weight.
    pub N: u64,
    pub mu: Option<Rational>,
    /// `mu = 1 + 1/t` when chosen automatically.
    pub t: Option<u64>,
    /// `1 / mu^(n-1)`
    pub C: Option<Rational>,
    /// `C^k`
    pub V: Option<Rational>,
    pub eps: Option<Rational>,
}

impl GadgetParams {
    fn plain(k: usize, n: usize, points: &PointSet) -> Self {
        GadgetParams { k, n, N: points.total_weight(), mu: None, t: None, C: None, V: None, eps: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub params: GadgetParams,
    pub points: PointSet,
    pub problem: Problem,
    pub expected_positive: Expected,
    pub expected_negative: Option<Rational>,
    /// Net instances: which points form the candidate net.
    pub subset: Option<Vec<bool>>,
}

fn check_sizes(g: &Graph, k: usize) -> Result<()> {
    if k < 2 || g.n() < 2 {
        return Err(Error::DegenerateReduction(format!("need k >= 2 and n >= 2, got k={k}, n={}", g.n())));
    }
    Ok(())
}

/// Point of dimension `2k` that is `xy` in plane `i` and zero elsewhere.
fn in_plane(k: usize, i: usize, xy: (Rational, Rational)) -> Point {
    let mut c = vec![Rational::zero(); 2 * k];
    c[2 * i] = xy.0;
    c[2 * i + 1] = xy.1;
    Point(c)
}

fn add(a: &Point, b: &Point) -> Point {
    Point(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
}

/// Vertex pairs `(u, v)` that may not be chosen together in two planes:
/// non-edges and repeated vertices.
fn forbidden_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    (1..=n).flat_map(|u| (1..=n).map(move |v| (u, v))).filter(|&(u, v)| u == v || !g.has_edge(u, v)).collect()
}

/// Collects points, merging exact duplicates of the same color (first
/// occurrence wins).
struct Builder {
    seen: HashSet<(Point, Option<Color>)>,
    points: PointSet,
}

impl Builder {
    fn new(dim: usize) -> Self {
        Builder { seen: HashSet::new(), points: PointSet::new(dim).expect("dim >= 4") }
    }

    fn add(&mut self, p: Point, color: Option<Color>, weight: u64) {
        if self.seen.insert((p.clone(), color)) {
            self.points.push(WeightedPoint { point: p, color, weight }).expect("builder points are well formed");
        }
    }
}

fn kill_points(g: &Graph, k: usize, per_plane: impl Fn(usize, usize) -> Point) -> Vec<Point> {
    let pairs = forbidden_pairs(g);
    let mut out = Vec::new();
    for i in 0..k {
        for j in (0..k).filter(|&j| j != i) {
            for &(u, v) in &pairs {
                out.push(add(&per_plane(i, u), &per_plane(j, v)));
            }
        }
    }
    out
}

/// Separation gadget: a box with `k + 1` blue points and no red point exists
/// iff `G` has a `k`-clique.
pub fn build_bichromatic_gadget(g: &Graph, k: usize, normalize: bool) -> Result<GadgetInstance> {
    check_sizes(g, k)?;
    let n = g.n() as i64;
    let blue = |i: usize, v: usize| in_plane(k, i, (Rational::from(v as i64), Rational::from(n + 1 - v as i64)));
    let half = Rational::new(1, 2)?;
    let mut b = Builder::new(2 * k);
    b.add(Point::origin(2 * k), Some(Color::Blue), 1);
    for i in 0..k {
        for v in 1..=g.n() {
            b.add(blue(i, v), Some(Color::Blue), 1);
        }
    }
    for i in 0..k {
        for v in 1..g.n() {
            let x = Rational::from(v as i64) + &half;
            let y = Rational::from(n + 1) - &x;
            b.add(in_plane(k, i, (x, y)), Some(Color::Red), 1);
        }
    }
    for p in kill_points(g, k, blue) {
        b.add(p, Some(Color::Red), 1);
    }
    let mut points = b.points;
    if normalize {
        let scale = Rational::from(n + 1);
        points = points.map_coords(|_, c| c / &scale);
    }
    Ok(GadgetInstance {
        params: GadgetParams::plain(k, g.n(), &points),
        points,
        problem: Problem::BichromaticBox,
        expected_positive: Expected::Count(k as u64 + 1),
        expected_negative: None,
        subset: None,
    })
}

/// Red-blue discrepancy gadget: the bichromatic gadget with the origin
/// weighted by the original point count, so a box reaching discrepancy
/// `N + k` must contain the origin and `k` blue scaffold points but no red.
pub fn build_redblue_gadget(g: &Graph, k: usize) -> Result<GadgetInstance> {
    let base = build_bichromatic_gadget(g, k, true)?;
    let count = base.points.len() as u64;
    let zero = Point::origin(2 * k);
    let points =
        PointSet::from_points(2 * k, base.points.iter().map(|p| {
            let mut p = p.clone();
            if p.point == zero {
                p.weight = count;
            }
            p
        }).collect())?;
    Ok(GadgetInstance {
        params: GadgetParams::plain(k, g.n(), &points),
        points,
        problem: Problem::RedblueDisc,
        expected_positive: Expected::Count(count + k as u64),
        expected_negative: None,
        subset: None,
    })
}

/// Scaffold and kill points of the staircase construction for a given `mu`.
fn staircase(g: &Graph, k: usize, mu: &Rational) -> Result<(PointSet, Rational)> {
    check_sizes(g, k)?;
    if *mu <= Rational::one() {
        return Err(Error::InvalidParameter(format!("mu must exceed 1, got {mu}")));
    }
    let n = g.n() as i64;
    let inv = mu.recip()?;
    let power = |e: i64| if e >= 0 { mu.pow(e as u32) } else { inv.pow((-e) as u32) };
    let c = power(1 - n);
    let step = |u: i64, shift: i64| -> (Rational, Rational) { (&c * &power(u - shift), power(-u)) };
    let mut b = Builder::new(2 * k);
    for i in 0..k {
        for u in 0..=n {
            b.add(in_plane(k, i, step(u, 1)), None, 1);
        }
    }
    for p in kill_points(g, k, |i, u| in_plane(k, i, step(u as i64, 2))) {
        b.add(p, None, 1);
    }
    Ok((b.points, c))
}

fn staircase_params(k: usize, n: usize, points: &PointSet, mu: &Rational, t: Option<u64>, c: &Rational) -> GadgetParams {
    GadgetParams {
        t,
        mu: Some(mu.clone()),
        C: Some(c.clone()),
        V: Some(c.pow(k as u32)),
        ..GadgetParams::plain(k, n, points)
    }
}

/// Empty-star gadget: the largest empty anchored box has volume `C^k` when
/// `G` has a `k`-clique and at most `C^k / mu` otherwise.
pub fn build_empty_star_gadget(g: &Graph, k: usize, mu: &Rational) -> Result<GadgetInstance> {
    let (points, c) = staircase(g, k, mu)?;
    let params = staircase_params(k, g.n(), &points, mu, None, &c);
    let v = params.V.clone().expect("set above");
    Ok(GadgetInstance {
        params,
        points,
        problem: Problem::EmptyStar,
        expected_negative: Some(&v / mu),
        expected_positive: Expected::Value(v),
        subset: None,
    })
}

/// `t = 2knN` and `mu = 1 + 1/t`, which keeps `mu^(k(n-1)) < N/(N-1)`.
pub fn choose_mu(k: usize, n: usize, total: u64) -> Result<(u64, Rational)> {
    if k < 2 || n < 2 || total < 2 {
        return Err(Error::InvalidParameter(format!("need k, n, N >= 2, got k={k}, n={n}, N={total}")));
    }
    let t = 2 * k as u64 * n as u64 * total;
    let mu = Rational::new(t + 1, t)?;
    let lhs = mu.pow((k * (n - 1)) as u32);
    let rhs = Rational::new(total, total - 1)?;
    if lhs >= rhs {
        return Err(Error::Invariant(format!("mu^(k(n-1)) = {lhs} is not below {rhs}")));
    }
    Ok((t, mu))
}

/// Point count of the staircase set, which does not depend on `mu`.
fn staircase_len(g: &Graph, k: usize) -> Result<u64> {
    Ok(staircase(g, k, &Rational::from(2i64))?.0.total_weight())
}

fn ensure_above(value: &Rational, bound: &Rational, what: &str) -> Result<()> {
    if value <= bound {
        return Err(Error::Invariant(format!("{what}: {value} is not above {bound}")));
    }
    Ok(())
}

/// Star-discrepancy gadget: the staircase set with `mu` close enough to 1
/// that the empty-star deficit `C^k` dominates every excess term.
pub fn build_star_discrepancy_gadget(g: &Graph, k: usize) -> Result<GadgetInstance> {
    let total = staircase_len(g, k)?;
    let (t, mu) = choose_mu(k, g.n(), total)?;
    let (points, c) = staircase(g, k, &mu)?;
    let params = staircase_params(k, g.n(), &points, &mu, Some(t), &c);
    let v = params.V.clone().expect("set above");
    ensure_above(&v, &Rational::new(total - 1, total)?, "C^k vs (N-1)/N")?;
    Ok(GadgetInstance {
        params,
        points,
        problem: Problem::StarDisc,
        expected_negative: None,
        expected_positive: Expected::Value(v),
        subset: None,
    })
}

/// Replaces every zero coordinate by 1/2.
pub fn lift_points(ps: &PointSet) -> PointSet {
    let half = Rational::new(1, 2).expect("nonzero denominator");
    ps.map_coords(|_, c| if c.is_zero() { half.clone() } else { c.clone() })
}

/// Empty-box gadget: the lifted staircase set. Lifting forces every box of
/// volume at least 2/3 to behave like an anchored box in one plane pair.
pub fn build_empty_box_gadget(g: &Graph, k: usize) -> Result<GadgetInstance> {
    let total = staircase_len(g, k)?;
    let (t, mu) = choose_mu(k, g.n(), total)?;
    let (points, c) = staircase(g, k, &mu)?;
    let points = lift_points(&points);
    let params = staircase_params(k, g.n(), &points, &mu, Some(t), &c);
    let v = params.V.clone().expect("set above");
    ensure_above(&v, &Rational::new(2, 3)?, "C^k vs 2/3")?;
    ensure_above(&v, &Rational::new(total - 1, total)?, "C^k vs (N-1)/N")?;
    Ok(GadgetInstance {
        params,
        points,
        problem: Problem::EmptyBox,
        expected_negative: Some(&v / &mu),
        expected_positive: Expected::Value(v),
        subset: None,
    })
}

/// Box-discrepancy gadget: the staircase set plus the origin and the
/// all-ones corner, lifted except for the origin.
pub fn build_box_discrepancy_gadget(g: &Graph, k: usize) -> Result<GadgetInstance> {
    let total = staircase_len(g, k)? + 2;
    let (t, mu) = choose_mu(k, g.n(), total)?;
    let (stairs, c) = staircase(g, k, &mu)?;
    let d = 2 * k;
    let mut points = PointSet::new(d)?;
    points.push_point(Point::origin(d), None, 1)?;
    for p in lift_points(&stairs).iter() {
        points.push(p.clone())?;
    }
    points.push_point(Point::splat(d, &Rational::one()), None, 1)?;
    let params = staircase_params(k, g.n(), &points, &mu, Some(t), &c);
    let v = params.V.clone().expect("set above");
    ensure_above(&v, &Rational::new(total - 1, total)?, "C^k vs (N-1)/N")?;
    Ok(GadgetInstance {
        params,
        points,
        problem: Problem::BoxDisc,
        expected_negative: None,
        expected_positive: Expected::Value(v),
        subset: None,
    })
}

/// Rational point on the reflected quarter circle `(1,1) - (cos, sin)`,
/// parametrized by `s = tan(angle / 2)` in `[0, 1]`.
fn arc(s: &Rational) -> (Rational, Rational) {
    let one = Rational::one();
    let den = &one + &(s * s);
    let x = Rational::from(2i64) * s * s / &den;
    let y = (&one - s) * (&one - s) / &den;
    (x, y)
}

/// Half-space gadget: blue vertex points on a convex arc in each plane with
/// red separators between and beyond them, a blue origin, and red midpoints
/// of forbidden vertex pairs. A red-free closed half-space holds `k + 1` blue
/// points iff `G` has a `k`-clique.
pub fn build_halfspace_gadget(g: &Graph, k: usize) -> Result<GadgetInstance> {
    check_sizes(g, k)?;
    let n = g.n() as i64;
    let blue = |i: usize, v: usize| in_plane(k, i, arc(&Rational::new(v as i64, n + 1).expect("n >= 2")));
    let half = Rational::new(1, 2)?;
    let mut b = Builder::new(2 * k);
    b.add(Point::origin(2 * k), Some(Color::Blue), 1);
    for i in 0..k {
        for v in 1..=g.n() {
            b.add(blue(i, v), Some(Color::Blue), 1);
        }
    }
    for i in 0..k {
        for v in 0..=n {
            b.add(in_plane(k, i, arc(&Rational::new(2 * v + 1, 2 * (n + 1))?)), Some(Color::Red), 1);
        }
    }
    for p in kill_points(g, k, blue) {
        b.add(Point(p.0.iter().map(|c| c * &half).collect()), Some(Color::Red), 1);
    }
    let points = b.points;
    Ok(GadgetInstance {
        params: GadgetParams::plain(k, g.n(), &points),
        points,
        problem: Problem::HalfspaceBichromatic,
        expected_positive: Expected::Count(k as u64 + 1),
        expected_negative: None,
        subset: None,
    })
}

/// Net-verification instance: all gadget points with the reds as the
/// candidate net and `eps = (k+1)/|P|`. The net fails iff `G` has a
/// `k`-clique.
pub fn build_net_instance(g: &Graph, k: usize, family: NetFamily) -> Result<GadgetInstance> {
    let (base, problem) = match family {
        NetFamily::HalfSpace => (build_halfspace_gadget(g, k)?, Problem::NetHalfspace),
        NetFamily::Box => (build_bichromatic_gadget(g, k, true)?, Problem::NetBox),
    };
    let subset: Vec<bool> = base.points.iter().map(|p| p.color == Some(Color::Red)).collect();
    let eps = Rational::new(k as i64 + 1, base.points.total_weight() as i64)?;
    Ok(GadgetInstance {
        params: GadgetParams { eps: Some(eps), ..base.params },
        points: base.points,
        problem,
        expected_positive: base.expected_positive,
        expected_negative: None,
        subset: Some(subset),
    })
}

/// Builds the gadget for `problem`; `mu` is only used by the empty-star
/// builder, where it is required.
pub fn build_gadget(problem: Problem, g: &Graph, k: usize, mu: Option<&Rational>, normalize: bool) -> Result<GadgetInstance> {
    match problem {
        Problem::BichromaticBox => build_bichromatic_gadget(g, k, normalize),
        Problem::RedblueDisc => build_redblue_gadget(g, k),
        Problem::EmptyStar => {
            let mu = mu.ok_or_else(|| Error::InvalidParameter("empty-star gadget needs mu".into()))?;
            build_empty_star_gadget(g, k, mu)
        }
        Problem::StarDisc => build_star_discrepancy_gadget(g, k),
        Problem::EmptyBox => build_empty_box_gadget(g, k),
        Problem::BoxDisc => build_box_discrepancy_gadget(g, k),
        Problem::HalfspaceBichromatic => build_halfspace_gadget(g, k),
        Problem::NetHalfspace => build_net_instance(g, k, NetFamily::HalfSpace),
        Problem::NetBox => build_net_instance(g, k, NetFamily::Box),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{count_in_anchored, count_in_box, AnchoredBox, AxisBox, Closure};

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pt(cs: &[&str]) -> Point {
        Point(cs.iter().map(|c| r(c)).collect())
    }

    fn has(ps: &PointSet, p: &Point, color: Option<Color>) -> bool {
        ps.iter().any(|q| q.point == *p && q.color == color)
    }

    fn single_edge() -> Graph {
        Graph::new(2, [(1, 2)]).unwrap()
    }

    #[test]
    fn bichromatic_k3_counts() {
        let raw = build_bichromatic_gadget(&Graph::complete(3), 2, false).unwrap();
        assert_eq!(raw.points.color_weight(Color::Blue), 7);
        assert_eq!(raw.points.color_weight(Color::Red), 7);
        assert_eq!(raw.params.N, 14);
        assert_eq!(raw.points.dim(), 4);
        assert!(has(&raw.points, &pt(&["2", "2", "0", "0"]), Some(Color::Blue)));
        assert!(has(&raw.points, &pt(&["3/2", "5/2", "0", "0"]), Some(Color::Red)));
        assert!(has(&raw.points, &pt(&["1", "3", "1", "3"]), Some(Color::Red)));
        assert_eq!(raw.expected_positive, Expected::Count(3));

        let norm = build_bichromatic_gadget(&Graph::complete(3), 2, true).unwrap();
        norm.points.ensure_unit_cube().unwrap();
        assert!(has(&norm.points, &pt(&["1/2", "1/2", "0", "0"]), Some(Color::Blue)));
    }

    #[test]
    fn empty_graph_kills_every_pair() {
        let gad = build_bichromatic_gadget(&Graph::empty(2), 2, false).unwrap();
        for u in 1..=2i64 {
            for v in 1..=2i64 {
                let p = Point(vec![u.into(), (3 - u).into(), v.into(), (3 - v).into()]);
                assert!(has(&gad.points, &p, Some(Color::Red)), "missing kill {u}{v}");
            }
        }
    }

    #[test]
    fn degenerate_sizes_refused() {
        assert!(matches!(build_bichromatic_gadget(&Graph::complete(3), 1, true), Err(Error::DegenerateReduction(_))));
        assert!(build_halfspace_gadget(&Graph::empty(1), 2).is_err());
        assert!(build_empty_star_gadget(&Graph::complete(2), 2, &Rational::one()).is_err());
    }

    #[test]
    fn redblue_origin_weight() {
        let gad = build_redblue_gadget(&Graph::complete(3), 2).unwrap();
        let origin = gad.points.iter().find(|p| p.point == Point::origin(4)).unwrap();
        assert_eq!(origin.weight, 14);
        assert_eq!(gad.expected_positive, Expected::Count(16));
        assert_eq!(gad.params.N, gad.points.total_weight());
    }

    #[test]
    fn scaffold_plane_is_balanced() {
        // one plane of scaffold points only: any box sees an alternating run
        let n = 4;
        let gad = build_bichromatic_gadget(&Graph::complete(n), 2, false).unwrap();
        let plane = PointSet::from_points(
            2,
            gad.points
                .iter()
                .filter(|p| p.point.0[2].is_zero() && p.point.0[3].is_zero() && !p.point.0[0].is_zero())
                .map(|p| WeightedPoint { point: Point(p.point.0[..2].to_vec()), ..p.clone() })
                .collect(),
        )
        .unwrap();
        assert_eq!(plane.len(), 2 * n - 1);
        let coords: Vec<Rational> = (0..=2 * (n + 1)).map(|h| Rational::new(h as i64, 2).unwrap()).collect();
        for x0 in &coords {
            for x1 in coords.iter().filter(|x| *x >= x0) {
                for y0 in &coords {
                    for y1 in coords.iter().filter(|y| *y >= y0) {
                        let b = AxisBox::new(
                            Point(vec![x0.clone(), y0.clone()]),
                            Point(vec![x1.clone(), y1.clone()]),
                            Closure::Closed,
                        )
                        .unwrap();
                        let c = count_in_box(&plane, &b).unwrap();
                        assert!(c.blue.abs_diff(c.red) <= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn staircase_plane_values() {
        let gad = build_empty_star_gadget(&Graph::complete(3), 2, &r("2")).unwrap();
        assert_eq!(gad.params.C, Some(r("1/4")));
        for xy in [["1/8", "1"], ["1/4", "1/2"], ["1/2", "1/4"], ["1", "1/8"]] {
            assert!(has(&gad.points, &pt(&[xy[0], xy[1], "0", "0"]), None));
            assert!(has(&gad.points, &pt(&["0", "0", xy[0], xy[1]]), None));
        }
        let gad = build_empty_star_gadget(&single_edge(), 2, &r("2")).unwrap();
        assert_eq!(gad.expected_positive, Expected::Value(r("1/4")));
        assert_eq!(gad.expected_negative, Some(r("1/8")));
        for p in gad.points.iter() {
            assert!(p.point.0.iter().all(|c| *c <= Rational::one() && !c.is_negative()));
        }
    }

    #[test]
    fn choose_mu_examples() {
        assert_eq!(choose_mu(2, 2, 8).unwrap(), (64, r("65/64")));
        assert_eq!(choose_mu(2, 3, 20).unwrap(), (240, r("241/240")));
        assert_eq!(choose_mu(3, 4, 50).unwrap(), (1200, r("1201/1200")));
        assert!(r("4225/4096") < r("8/7"));
    }

    #[test]
    fn star_discrepancy_single_edge() {
        let gad = build_star_discrepancy_gadget(&single_edge(), 2).unwrap();
        assert_eq!(gad.params.N, 8);
        assert_eq!(gad.params.mu, Some(r("65/64")));
        assert_eq!(gad.params.t, Some(64));
        assert_eq!(gad.expected_positive, Expected::Value(r("4096/4225")));
        assert!(r("4096/4225") > r("7/8"));
    }

    #[test]
    fn lift_examples() {
        let ps = PointSet::uncolored(4, [pt(&["1", "3", "0", "0"]), Point::origin(4), pt(&["1/4", "1", "1/8", "1"])]).unwrap();
        let l = lift_points(&ps);
        assert_eq!(l.points()[0].point, pt(&["1", "3", "1/2", "1/2"]));
        assert_eq!(l.points()[1].point, Point::splat(4, &r("1/2")));
        assert_eq!(l.points()[2].point, pt(&["1/4", "1", "1/8", "1"]));
    }

    #[test]
    fn lifted_box_gadgets() {
        let gad = build_empty_box_gadget(&single_edge(), 2).unwrap();
        for p in gad.points.iter() {
            assert!(p.point.0.iter().all(|c| *c >= r("1/2") && *c <= Rational::one()));
        }
        let gad = build_box_discrepancy_gadget(&single_edge(), 2).unwrap();
        assert_eq!(gad.params.N, 10);
        assert_eq!(gad.params.t, Some(80));
        assert_eq!(gad.params.mu, Some(r("81/80")));
        assert!(has(&gad.points, &Point::origin(4), None));
        assert!(has(&gad.points, &Point::splat(4, &Rational::one()), None));
        let full = AnchoredBox::new(Point::splat(4, &Rational::one()), Closure::Closed);
        assert_eq!(count_in_anchored(&gad.points, &full).unwrap().total(), gad.params.N);
    }

    #[test]
    fn halfspace_curve() {
        let gad = build_halfspace_gadget(&Graph::complete(3), 2).unwrap();
        assert!(has(&gad.points, &pt(&["2/5", "1/5", "0", "0"]), Some(Color::Blue)));
        // guards at parameters 1/8 and 7/8
        let g1 = arc(&r("1/8"));
        let g7 = arc(&r("7/8"));
        assert!(has(&gad.points, &in_plane(2, 0, g1), Some(Color::Red)));
        assert!(has(&gad.points, &in_plane(2, 1, g7), Some(Color::Red)));
        gad.points.ensure_unit_cube().unwrap();
    }

    #[test]
    fn net_instance_marks_reds() {
        let gad = build_net_instance(&Graph::complete(3), 2, NetFamily::Box).unwrap();
        let subset = gad.subset.as_ref().unwrap();
        assert_eq!(subset.iter().filter(|&&s| s).count(), 7);
        assert_eq!(gad.params.eps, Some(r("3/14")));
        assert_eq!(gad.problem, Problem::NetBox);
    }

    #[test]
    fn problem_names_round_trip() {
        for p in Problem::ALL {
            assert_eq!(p.name().parse::<Problem>().unwrap(), p);
            assert_eq!(serde_json::to_string(&p).unwrap(), format!("\"{}\"", p.name()));
        }
        assert_eq!("bichromatic".parse::<Problem>().unwrap(), Problem::BichromaticBox);
        assert!("nope".parse::<Problem>().is_err());
    }
}
