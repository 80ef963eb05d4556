//! Points, weighted colored point sets, ranges and exact counting.
//!
//! Conventions shared by every solver:
//!
//! * An open [`AnchoredBox`] is `{y : 0 <= y_j < x_j}`. The lower face at the
//!   origin stays inclusive so a point at the origin lies in every nonempty
//!   anchored box.
//! * An open [`AxisBox`] is strict on every face; a closed one is inclusive on
//!   every face. Degenerate boxes (some `lower_j = upper_j`) are legal and
//!   have volume zero.
//! * A point of weight `w` counts as `w` coincident copies everywhere.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Point(pub Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Rational::zero(); dim])
    }

    pub fn splat(dim: usize, value: &Rational) -> Self {
        Point(vec![value.clone(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dot(&self, other: &[Rational]) -> Rational {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }
}

impl std::ops::Index<usize> for Point {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedPoint {
    pub point: Point,
    pub color: Option<Color>,
    pub weight: u64,
}

/// A d-dimensional multiset of points, each with an optional color and a
/// positive integer weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<WeightedPoint>,
}

impl PointSet {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be at least 1".into()));
        }
        Ok(PointSet { dim, points: Vec::new() })
    }

    pub fn from_points(dim: usize, points: Vec<WeightedPoint>) -> Result<Self> {
        let mut ps = PointSet::new(dim)?;
        for p in points {
            ps.push(p)?;
        }
        Ok(ps)
    }

    /// Uncolored unit-weight points.
    pub fn uncolored(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        PointSet::from_points(dim, points.into_iter().map(|p| WeightedPoint { point: p, color: None, weight: 1 }).collect())
    }

    pub fn push(&mut self, p: WeightedPoint) -> Result<()> {
        if p.point.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: p.point.dim() });
        }
        if p.weight == 0 {
            return Err(Error::ZeroWeight { index: self.points.len() });
        }
        self.points.push(p);
        Ok(())
    }

    pub fn push_point(&mut self, point: Point, color: Option<Color>, weight: u64) -> Result<()> {
        self.push(WeightedPoint { point, color, weight })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[WeightedPoint] {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = &WeightedPoint> {
        self.points.iter()
    }

    pub fn total_weight(&self) -> u64 {
        self.points.iter().map(|p| p.weight).sum()
    }

    pub fn color_weight(&self, color: Color) -> u64 {
        self.points.iter().filter(|p| p.color == Some(color)).map(|p| p.weight).sum()
    }

    pub fn with_color(&self, color: Color) -> impl Iterator<Item = &WeightedPoint> {
        self.points.iter().filter(move |p| p.color == Some(color))
    }

    pub fn ensure_nonempty(&self) -> Result<()> {
        if self.points.is_empty() {
            Err(Error::EmptyPointSet)
        } else {
            Ok(())
        }
    }

    pub fn ensure_unit_cube(&self) -> Result<()> {
        let zero = Rational::zero();
        let one = Rational::one();
        for (index, p) in self.points.iter().enumerate() {
            if let Some(c) = p.point.0.iter().find(|c| **c < zero || **c > one) {
                return Err(Error::OutsideUnitCube { index, value: c.to_string() });
            }
        }
        Ok(())
    }

    /// Copy with every coordinate passed through `f`.
    pub fn map_coords(&self, mut f: impl FnMut(usize, &Rational) -> Rational) -> PointSet {
        let points = self
            .points
            .iter()
            .map(|p| WeightedPoint {
                point: Point(p.point.0.iter().enumerate().map(|(j, c)| f(j, c)).collect()),
                color: p.color,
                weight: p.weight,
            })
            .collect();
        PointSet { dim: self.dim, points }
    }

    /// Copy with colors reassigned by index.
    pub fn recolor(&self, mut f: impl FnMut(usize, &WeightedPoint) -> Option<Color>) -> PointSet {
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| WeightedPoint { point: p.point.clone(), color: f(i, p), weight: p.weight })
            .collect();
        PointSet { dim: self.dim, points }
    }

    /// Applies the same permutation of axes to every point.
    pub fn permute_dims(&self, perm: &[usize]) -> PointSet {
        let points = self
            .points
            .iter()
            .map(|p| WeightedPoint {
                point: Point(perm.iter().map(|&j| p.point.0[j].clone()).collect()),
                color: p.color,
                weight: p.weight,
            })
            .collect();
        PointSet { dim: self.dim, points }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Closure {
    Open,
    Closed,
}

/// Box `[0, x]` (closed) or `[0, x)` (open) with lower corner at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnchoredBox {
    pub upper: Point,
    pub closure: Closure,
}

impl AnchoredBox {
    pub fn new(upper: Point, closure: Closure) -> Self {
        AnchoredBox { upper, closure }
    }

    pub fn dim(&self) -> usize {
        self.upper.dim()
    }

    pub fn contains(&self, p: &Point) -> bool {
        let zero = Rational::zero();
        p.0.iter().zip(&self.upper.0).all(|(y, x)| {
            *y >= zero
                && match self.closure {
                    Closure::Closed => y <= x,
                    Closure::Open => y < x,
                }
        })
    }

    pub fn volume(&self) -> Rational {
        self.upper.0.iter().product()
    }

    pub fn to_box(&self) -> AxisBox {
        AxisBox { lower: Point::origin(self.dim()), upper: self.upper.clone(), closure: self.closure }
    }
}

/// Axis-parallel box between `lower` and `upper`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AxisBox {
    pub lower: Point,
    pub upper: Point,
    pub closure: Closure,
}

impl AxisBox {
    pub fn new(lower: Point, upper: Point, closure: Closure) -> Result<Self> {
        if lower.dim() != upper.dim() {
            return Err(Error::DimensionMismatch { expected: lower.dim(), got: upper.dim() });
        }
        if lower.0.iter().zip(&upper.0).any(|(a, b)| a > b) {
            return Err(Error::InvalidParameter("box lower corner exceeds upper corner".into()));
        }
        Ok(AxisBox { lower, upper, closure })
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.0.iter().zip(self.lower.0.iter().zip(&self.upper.0)).all(|(y, (a, b))| match self.closure {
            Closure::Closed => a <= y && y <= b,
            Closure::Open => a < y && y < b,
        })
    }

    pub fn volume(&self) -> Rational {
        self.lower.0.iter().zip(&self.upper.0).map(|(a, b)| b - a).product()
    }

    /// Smallest closed box containing every given point.
    pub fn bounding<'a>(points: impl IntoIterator<Item = &'a Point>) -> Option<AxisBox> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let mut lower = first.clone();
        let mut upper = first.clone();
        for p in it {
            for j in 0..p.dim() {
                if p.0[j] < lower.0[j] {
                    lower.0[j] = p.0[j].clone();
                }
                if p.0[j] > upper.0[j] {
                    upper.0[j] = p.0[j].clone();
                }
            }
        }
        Some(AxisBox { lower, upper, closure: Closure::Closed })
    }
}

/// Closed half-space `{x : normal . x <= offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl HalfSpace {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self> {
        if normal.iter().all(Rational::is_zero) {
            return Err(Error::InvalidParameter("half-space normal must be nonzero".into()));
        }
        Ok(HalfSpace { normal, offset })
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Sign of `normal . p - offset`.
    pub fn side(&self, p: &Point) -> std::cmp::Ordering {
        p.dot(&self.normal).cmp(&self.offset)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.side(p) != std::cmp::Ordering::Greater
    }
}

/// Any range a solver can report.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Range {
    Anchored(AnchoredBox),
    Box(AxisBox),
    HalfSpace(HalfSpace),
}

impl Range {
    pub fn dim(&self) -> usize {
        match self {
            Range::Anchored(b) => b.dim(),
            Range::Box(b) => b.dim(),
            Range::HalfSpace(h) => h.dim(),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            Range::Anchored(b) => b.contains(p),
            Range::Box(b) => b.contains(p),
            Range::HalfSpace(h) => h.contains(p),
        }
    }

    /// Lebesgue volume for boxes; `None` for half-spaces.
    pub fn volume(&self) -> Option<Rational> {
        match self {
            Range::Anchored(b) => Some(b.volume()),
            Range::Box(b) => Some(b.volume()),
            Range::HalfSpace(_) => None,
        }
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Range::Anchored(b) => {
                let close = if b.closure == Closure::Closed { "]" } else { ")" };
                write!(f, "anchored [0, {}{}", b.upper, close)
            }
            Range::Box(b) => {
                let (l, r) = if b.closure == Closure::Closed { ("[", "]") } else { ("(", ")") };
                write!(f, "box {l}{}, {}{r}", b.lower, b.upper)
            }
            Range::HalfSpace(h) => write!(f, "half-space {} . x <= {}", Point(h.normal.clone()), h.offset),
        }
    }
}

/// Weight tallies by color.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub red: u64,
    pub blue: u64,
    pub uncolored: u64,
}

impl Counts {
    pub fn total(&self) -> u64 {
        self.red + self.blue + self.uncolored
    }

    pub fn of(&self, color: Color) -> u64 {
        match color {
            Color::Red => self.red,
            Color::Blue => self.blue,
        }
    }

    fn add(&mut self, p: &WeightedPoint) {
        match p.color {
            Some(Color::Red) => self.red += p.weight,
            Some(Color::Blue) => self.blue += p.weight,
            None => self.uncolored += p.weight,
        }
    }
}

fn check_dim(ps: &PointSet, dim: usize) -> Result<()> {
    if ps.dim() != dim {
        return Err(Error::DimensionMismatch { expected: ps.dim(), got: dim });
    }
    Ok(())
}

/// Weight inside a range, per color.
pub fn count_in_range(ps: &PointSet, range: &Range) -> Result<Counts> {
    check_dim(ps, range.dim())?;
    let mut c = Counts::default();
    for p in ps.iter().filter(|p| range.contains(&p.point)) {
        c.add(p);
    }
    Ok(c)
}

pub fn count_in_box(ps: &PointSet, b: &AxisBox) -> Result<Counts> {
    check_dim(ps, b.dim())?;
    let mut c = Counts::default();
    for p in ps.iter().filter(|p| b.contains(&p.point)) {
        c.add(p);
    }
    Ok(c)
}

pub fn count_in_anchored(ps: &PointSet, b: &AnchoredBox) -> Result<Counts> {
    check_dim(ps, b.dim())?;
    let mut c = Counts::default();
    for p in ps.iter().filter(|p| b.contains(&p.point)) {
        c.add(p);
    }
    Ok(c)
}

pub fn box_volume(b: &AxisBox) -> Rational {
    b.volume()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HalfSpaceCounts {
    pub inside: Counts,
    pub boundary: Counts,
    pub outside: Counts,
}

/// Three-way classification by the sign of `normal . p - offset`.
pub fn halfspace_counts(ps: &PointSet, hs: &HalfSpace) -> Result<HalfSpaceCounts> {
    check_dim(ps, hs.dim())?;
    let mut out = HalfSpaceCounts::default();
    for p in ps.iter() {
        match hs.side(&p.point) {
            std::cmp::Ordering::Less => out.inside.add(p),
            std::cmp::Ordering::Equal => out.boundary.add(p),
            std::cmp::Ordering::Greater => out.outside.add(p),
        }
    }
    Ok(out)
}

/// Sorted distinct coordinates per axis, optionally with the sentinels 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalGrid {
    pub axes: Vec<Vec<Rational>>,
}

impl CriticalGrid {
    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    /// Number of corners, the product of the axis lengths.
    pub fn corner_count(&self) -> u128 {
        self.axes.iter().map(|a| a.len() as u128).product()
    }
}

pub fn critical_grid(ps: &PointSet, with_zero: bool, with_one: bool) -> Result<CriticalGrid> {
    ps.ensure_nonempty()?;
    Ok(grid_of(ps, with_zero, with_one))
}

/// Like [`critical_grid`] but an empty set yields sentinel-only axes.
pub(crate) fn grid_of(ps: &PointSet, with_zero: bool, with_one: bool) -> CriticalGrid {
    let axes = (0..ps.dim())
        .map(|j| {
            let mut s: BTreeSet<Rational> = ps.iter().map(|p| p.point.0[j].clone()).collect();
            if with_zero {
                s.insert(Rational::zero());
            }
            if with_one {
                s.insert(Rational::one());
            }
            s.into_iter().collect()
        })
        .collect();
    CriticalGrid { axes }
}
