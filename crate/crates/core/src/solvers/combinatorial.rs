//! Bichromatic rectangle and red-blue box discrepancy.
//!
//! Both searches fix one axis interval at a time, with faces on coordinates
//! of majority-color points that are still inside the partial box. A branch
//! stops as soon as it holds no minority-color weight (the bounding box of
//! its majority points is then optimal for the branch) and is cut when its
//! majority weight cannot beat the incumbent.

use std::collections::BTreeSet;
use std::time::Instant;

use super::mask::{Mask, Weights};
use super::{merge_best, BichromaticReport, DiscrepancyReport, Side, Solver};
use crate::error::{Error, Result};
use crate::geometry::{AnchoredBox, AxisBox, Closure, Color, Point, PointSet, Range};
use crate::numerics::Rational;

pub fn solve_bichromatic_box(ps: &PointSet, anchored: bool) -> Result<BichromaticReport> {
    Solver::default().bichromatic_box(ps, anchored)
}

pub fn solve_redblue_box_discrepancy(ps: &PointSet) -> Result<DiscrepancyReport> {
    Solver::default().redblue_box_discrepancy(ps)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Objective {
    /// majority weight, minority must be zero
    Separation,
    /// majority minus minority weight
    Difference,
}

/// Precomputed interval masks for one majority color.
struct Index<'a> {
    ps: &'a PointSet,
    majority: Color,
    anchored: bool,
    /// distinct majority coordinates per axis
    axes: Vec<Vec<Rational>>,
    /// rank of each point's coordinate in `axes[j]`, for majority points
    rank: Vec<Vec<usize>>,
    /// `masks[j][lo][hi - lo]` holds points in `[axes[j][lo], axes[j][hi]]`,
    /// or in `[0, axes[j][hi]]` when anchored (then `lo` is 0)
    masks: Vec<Vec<Vec<Mask>>>,
    weights: Weights,
}

impl<'a> Index<'a> {
    fn new(ps: &'a PointSet, majority: Color, anchored: bool) -> Self {
        let d = ps.dim();
        let pts = ps.points();
        let n = pts.len();
        let zero = Rational::zero();
        let usable = |i: usize| !anchored || pts[i].point.coords().iter().all(|c| *c >= zero);
        let axes: Vec<Vec<Rational>> = (0..d)
            .map(|j| {
                let s: BTreeSet<Rational> =
                    (0..n).filter(|&i| pts[i].color == Some(majority) && usable(i)).map(|i| pts[i].point[j].clone()).collect();
                s.into_iter().collect()
            })
            .collect();
        let rank = (0..d)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        if pts[i].color == Some(majority) {
                            axes[j].binary_search(&pts[i].point[j]).unwrap_or(usize::MAX)
                        } else {
                            usize::MAX
                        }
                    })
                    .collect()
            })
            .collect();
        let masks = (0..d)
            .map(|j| {
                let ax = &axes[j];
                (0..ax.len())
                    .map(|lo| {
                        (lo..ax.len())
                            .map(|hi| {
                                Mask::from_fn(n, |i| {
                                    let y = &pts[i].point[j];
                                    let low = if anchored { &zero } else { &ax[lo] };
                                    low <= y && y <= &ax[hi]
                                })
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Index { ps, majority, anchored, axes, rank, masks, weights: Weights::new(ps) }
    }

    fn root(&self) -> Mask {
        let pts = self.ps.points();
        let zero = Rational::zero();
        Mask::from_fn(pts.len(), |i| !self.anchored || pts[i].point.coords().iter().all(|c| *c >= zero))
    }

    /// Interval choices on axis `j` among majority points alive in `mask`.
    fn choices(&self, j: usize, mask: &Mask) -> Vec<(usize, usize)> {
        let alive = mask.and(self.weights.color_mask(self.majority));
        let present: BTreeSet<usize> =
            alive.ones().map(|i| self.rank[j][i]).filter(|&r| r != usize::MAX).collect();
        let present: Vec<usize> = present.into_iter().collect();
        if self.anchored {
            present.iter().map(|&hi| (0, hi)).collect()
        } else {
            present.iter().enumerate().flat_map(|(a, &lo)| present[a..].iter().map(move |&hi| (lo, hi))).collect()
        }
    }

    fn mask(&self, j: usize, (lo, hi): (usize, usize)) -> &Mask {
        &self.masks[j][lo][hi - lo]
    }

    /// Tightest range around the majority points of `mask`.
    fn hull(&self, mask: &Mask) -> Option<Range> {
        let pts = self.ps.points();
        let chosen = mask.and(self.weights.color_mask(self.majority));
        let bb = AxisBox::bounding(chosen.ones().map(|i| &pts[i].point))?;
        Some(if self.anchored {
            Range::Anchored(AnchoredBox::new(bb.upper, Closure::Closed))
        } else {
            Range::Box(bb)
        })
    }

    fn chosen_box(&self, choice: &[(usize, usize)]) -> Range {
        let upper = Point(choice.iter().enumerate().map(|(j, &(_, hi))| self.axes[j][hi].clone()).collect());
        if self.anchored {
            Range::Anchored(AnchoredBox::new(upper, Closure::Closed))
        } else {
            let lower = Point(choice.iter().enumerate().map(|(j, &(lo, _))| self.axes[j][lo].clone()).collect());
            Range::Box(AxisBox { lower, upper, closure: Closure::Closed })
        }
    }
}

struct Found {
    value: i128,
    witness: Range,
}

struct Walk<'a, 'b> {
    index: &'b Index<'a>,
    objective: Objective,
    choice: Vec<(usize, usize)>,
    best: Option<Found>,
    evaluated: u64,
}

impl Walk<'_, '_> {
    fn improves(&self, v: i128) -> bool {
        self.best.as_ref().is_none_or(|b| v > b.value)
    }

    fn descend(&mut self, j: usize, mask: &Mask) {
        let w = &self.index.weights;
        let maj = w.color(mask, self.index.majority) as i128;
        let min = w.color(mask, self.index.majority.other()) as i128;
        if maj == 0 || !self.improves(maj) {
            return;
        }
        if min == 0 {
            self.evaluated += 1;
            if let Some(witness) = self.index.hull(mask) {
                self.best = Some(Found { value: maj, witness });
            }
            return;
        }
        if j == self.index.axes.len() {
            self.evaluated += 1;
            if self.objective == Objective::Difference && self.improves(maj - min) {
                self.best = Some(Found { value: maj - min, witness: self.index.chosen_box(&self.choice) });
            }
            return;
        }
        for c in self.index.choices(j, mask) {
            self.choice[j] = c;
            self.descend(j + 1, &mask.and(self.index.mask(j, c)));
        }
    }
}

impl Solver {
    fn search(&self, index: &Index<'_>, objective: Objective) -> (Option<Found>, u64) {
        let d = index.axes.len();
        let root = index.root();
        let mut top = Walk { index, objective, choice: vec![(0, 0); d], best: None, evaluated: 0 };
        let w = &index.weights;
        if w.color(&root, index.majority) == 0 {
            return (None, 0);
        }
        if w.color(&root, index.majority.other()) == 0 {
            top.descend(0, &root);
            return (top.best, top.evaluated);
        }
        let firsts = index.choices(0, &root);
        let parts = self.run_partitions(firsts.len(), |p| {
            let mut walk = Walk { index, objective, choice: vec![(0, 0); d], best: None, evaluated: 0 };
            walk.choice[0] = firsts[p];
            walk.descend(1, &root.and(index.mask(0, firsts[p])));
            (walk.best, walk.evaluated)
        });
        let evaluated = parts.iter().map(|p| p.1).sum();
        let best = merge_best(parts.into_iter().filter_map(|p| p.0), |f| Some(f.value));
        (best, evaluated)
    }

    /// Maximum blue weight in a closed box with no red weight. With
    /// `anchored`, boxes have their lower corner at the origin.
    pub fn bichromatic_box(&self, ps: &PointSet, anchored: bool) -> Result<BichromaticReport> {
        let start = Instant::now();
        if ps.color_weight(Color::Blue) == 0 {
            return Err(Error::NoBluePoints);
        }
        let index = Index::new(ps, Color::Blue, anchored);
        let (best, evaluated) = self.search(&index, Objective::Separation);
        let (value, witness) = match best {
            Some(f) => (f.value as u64, Some(f.witness)),
            None => (0, None),
        };
        Ok(BichromaticReport {
            value,
            feasible: witness.is_some(),
            witness,
            candidates_evaluated: evaluated,
            elapsed: start.elapsed(),
        })
    }

    /// Maximum of `|red - blue|` over closed boxes, taking the better of the
    /// blue-majority and red-majority searches (blue wins ties).
    pub fn redblue_box_discrepancy(&self, ps: &PointSet) -> Result<DiscrepancyReport> {
        let start = Instant::now();
        ps.ensure_nonempty()?;
        let mut evaluated = 0;
        let mut sides = Vec::new();
        for (color, side) in [(Color::Blue, Side::Excess), (Color::Red, Side::Deficit)] {
            let index = Index::new(ps, color, false);
            let (best, n) = self.search(&index, Objective::Difference);
            evaluated += n;
            if let Some(f) = best {
                sides.push((f, side));
            }
        }
        // The degenerate box at any point location is a candidate of whichever
        // color dominates there, so the merged optimum is never negative.
        let (found, side) = merge_best(sides, |(f, _)| Some(f.value))
            .ok_or_else(|| Error::InvalidParameter("no colored points".into()))?;
        debug_assert!(found.value >= 0);
        Ok(DiscrepancyReport {
            value: Rational::from_integer(found.value),
            witness: found.witness,
            side,
            candidates_evaluated: evaluated,
            elapsed: start.elapsed(),
        })
    }
}
