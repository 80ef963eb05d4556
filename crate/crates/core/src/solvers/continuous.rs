//! Star and box discrepancy, maximum empty star and maximum empty box.

use std::time::Instant;

use super::mask::{Mask, Weights};
use super::{merge_best, DiscrepancyReport, EmptyBoxReport, Side, Solver};
use crate::error::Result;
use crate::geometry::{grid_of, AnchoredBox, AxisBox, Closure, Point, PointSet, Range};
use crate::numerics::Rational;

pub fn solve_star_discrepancy(ps: &PointSet) -> Result<DiscrepancyReport> {
    Solver::default().star_discrepancy(ps)
}

pub fn solve_box_discrepancy(ps: &PointSet) -> Result<DiscrepancyReport> {
    Solver::default().box_discrepancy(ps)
}

pub fn solve_max_empty_star(ps: &PointSet) -> Result<EmptyBoxReport> {
    Solver::default().max_empty_star(ps)
}

pub fn solve_max_empty_box(ps: &PointSet) -> Result<EmptyBoxReport> {
    Solver::default().max_empty_box(ps)
}

/// `c / W` for every count `c`, cached when `W` is small.
struct Fractions {
    total: u64,
    table: Vec<Rational>,
}

impl Fractions {
    fn new(total: u64) -> Self {
        let table = if total <= 1 << 16 {
            (0..=total).map(|c| Rational::new(c, total).expect("nonzero total")).collect()
        } else {
            Vec::new()
        };
        Fractions { total, table }
    }

    fn get(&self, c: u64) -> Rational {
        match self.table.get(c as usize) {
            Some(r) => r.clone(),
            None => Rational::new(c, self.total).expect("nonzero total"),
        }
    }
}

/// Per-axis interval candidates `(lower index, upper index)` into the grid.
fn interval_pairs(len: usize) -> Vec<(usize, usize)> {
    (0..len).flat_map(|a| (a..len).map(move |b| (a, b))).collect()
}

struct Best<K> {
    value: Rational,
    key: K,
}

struct Partial<K> {
    best: Option<Best<K>>,
    evaluated: u64,
}

impl<K: Clone> Partial<K> {
    fn new() -> Self {
        Partial { best: None, evaluated: 0 }
    }

    fn offer(&mut self, value: Rational, key: impl FnOnce() -> K) {
        if self.best.as_ref().is_none_or(|b| value > b.value) {
            self.best = Some(Best { value, key: key() });
        }
    }

    fn beaten_by(&self, bound: &Rational) -> bool {
        self.best.as_ref().is_none_or(|b| *bound > b.value)
    }
}

fn merge<K>(parts: Vec<Partial<K>>) -> (Option<Best<K>>, u64) {
    let evaluated = parts.iter().map(|p| p.evaluated).sum();
    let best = merge_best(parts.into_iter().filter_map(|p| p.best), |b| Some(b.value.clone()));
    (best, evaluated)
}

impl Solver {
    /// Maximum of `max(closed_count/W - vol, vol - open_count/W)` over every
    /// anchored corner of the critical grid (with sentinel 1).
    pub fn star_discrepancy(&self, ps: &PointSet) -> Result<DiscrepancyReport> {
        let start = Instant::now();
        ps.ensure_nonempty()?;
        ps.ensure_unit_cube()?;
        let d = ps.dim();
        let grid = grid_of(ps, false, true);
        let pts = ps.points();
        let n = pts.len();
        let closed: Vec<Vec<Mask>> = (0..d)
            .map(|j| grid.axes[j].iter().map(|x| Mask::from_fn(n, |i| pts[i].point[j] <= *x)).collect())
            .collect();
        let open: Vec<Vec<Mask>> = (0..d)
            .map(|j| grid.axes[j].iter().map(|x| Mask::from_fn(n, |i| pts[i].point[j] < *x)).collect())
            .collect();
        let weights = Weights::new(ps);
        let frac = Fractions::new(ps.total_weight());

        struct Walk<'a> {
            axes: &'a [Vec<Rational>],
            closed: &'a [Vec<Mask>],
            open: &'a [Vec<Mask>],
            weights: &'a Weights,
            frac: &'a Fractions,
            corner: Vec<usize>,
            out: Partial<(Vec<usize>, Side)>,
        }

        impl Walk<'_> {
            fn descend(&mut self, j: usize, cm: &Mask, om: &Mask, vol: &Rational) {
                if j == self.axes.len() {
                    self.out.evaluated += 1;
                    let excess = self.frac.get(self.weights.total(cm)) - vol;
                    let deficit = vol - self.frac.get(self.weights.total(om));
                    let corner = &self.corner;
                    self.out.offer(excess, || (corner.clone(), Side::Excess));
                    self.out.offer(deficit, || (corner.clone(), Side::Deficit));
                    return;
                }
                for g in 0..self.axes[j].len() {
                    self.corner[j] = g;
                    let v = vol * &self.axes[j][g];
                    self.descend(j + 1, &cm.and(&self.closed[j][g]), &om.and(&self.open[j][g]), &v);
                }
            }
        }

        let parts = self.run_partitions(grid.axes[0].len(), |g0| {
            let mut w = Walk {
                axes: &grid.axes,
                closed: &closed,
                open: &open,
                weights: &weights,
                frac: &frac,
                corner: vec![0; d],
                out: Partial::new(),
            };
            w.corner[0] = g0;
            w.descend(1, &closed[0][g0], &open[0][g0], &grid.axes[0][g0]);
            w.out
        });
        let (best, evaluated) = merge(parts);
        let best = best.expect("grid has at least one corner");
        let (corner, side) = best.key;
        let upper = Point(corner.iter().enumerate().map(|(j, &g)| grid.axes[j][g].clone()).collect());
        let closure = if side == Side::Excess { Closure::Closed } else { Closure::Open };
        Ok(DiscrepancyReport {
            value: best.value,
            witness: Range::Anchored(AnchoredBox::new(upper, closure)),
            side,
            candidates_evaluated: evaluated,
            elapsed: start.elapsed(),
        })
    }

    /// Same two-sided maximum over every grid box `[a, b]` with `a` from the
    /// grid plus 0 and `b` from the grid plus 1.
    pub fn box_discrepancy(&self, ps: &PointSet) -> Result<DiscrepancyReport> {
        let start = Instant::now();
        ps.ensure_nonempty()?;
        ps.ensure_unit_cube()?;
        let d = ps.dim();
        let grid = grid_of(ps, true, true);
        let pts = ps.points();
        let n = pts.len();
        let pairs: Vec<Vec<(usize, usize)>> = grid.axes.iter().map(|a| interval_pairs(a.len())).collect();
        let lengths: Vec<Vec<Rational>> =
            (0..d).map(|j| pairs[j].iter().map(|&(a, b)| &grid.axes[j][b] - &grid.axes[j][a]).collect()).collect();
        let closed: Vec<Vec<Mask>> = (0..d)
            .map(|j| {
                let ax = &grid.axes[j];
                pairs[j]
                    .iter()
                    .map(|&(a, b)| Mask::from_fn(n, |i| ax[a] <= pts[i].point[j] && pts[i].point[j] <= ax[b]))
                    .collect()
            })
            .collect();
        let open: Vec<Vec<Mask>> = (0..d)
            .map(|j| {
                let ax = &grid.axes[j];
                pairs[j]
                    .iter()
                    .map(|&(a, b)| Mask::from_fn(n, |i| ax[a] < pts[i].point[j] && pts[i].point[j] < ax[b]))
                    .collect()
            })
            .collect();
        let weights = Weights::new(ps);
        let frac = Fractions::new(ps.total_weight());

        struct Walk<'a> {
            lengths: &'a [Vec<Rational>],
            closed: &'a [Vec<Mask>],
            open: &'a [Vec<Mask>],
            weights: &'a Weights,
            frac: &'a Fractions,
            choice: Vec<usize>,
            out: Partial<(Vec<usize>, Side)>,
        }

        impl Walk<'_> {
            fn descend(&mut self, j: usize, cm: &Mask, om: &Mask, vol: &Rational) {
                if j == self.lengths.len() {
                    self.out.evaluated += 1;
                    let excess = self.frac.get(self.weights.total(cm)) - vol;
                    let deficit = vol - self.frac.get(self.weights.total(om));
                    let choice = &self.choice;
                    self.out.offer(excess, || (choice.clone(), Side::Excess));
                    self.out.offer(deficit, || (choice.clone(), Side::Deficit));
                    return;
                }
                for p in 0..self.lengths[j].len() {
                    self.choice[j] = p;
                    let v = vol * &self.lengths[j][p];
                    self.descend(j + 1, &cm.and(&self.closed[j][p]), &om.and(&self.open[j][p]), &v);
                }
            }
        }

        let parts = self.run_partitions(pairs[0].len(), |p0| {
            let mut w = Walk {
                lengths: &lengths,
                closed: &closed,
                open: &open,
                weights: &weights,
                frac: &frac,
                choice: vec![0; d],
                out: Partial::new(),
            };
            w.choice[0] = p0;
            w.descend(1, &closed[0][p0], &open[0][p0], &lengths[0][p0]);
            w.out
        });
        let (best, evaluated) = merge(parts);
        let best = best.expect("grid has at least one box");
        let (choice, side) = best.key;
        let closure = if side == Side::Excess { Closure::Closed } else { Closure::Open };
        let witness = box_from_choice(&grid.axes, &pairs, &choice, closure);
        Ok(DiscrepancyReport {
            value: best.value,
            witness: Range::Box(witness),
            side,
            candidates_evaluated: evaluated,
            elapsed: start.elapsed(),
        })
    }

    /// Largest open anchored box `[0, x)` containing no point.
    ///
    /// Corners come from the grid with sentinel 1 in lexicographic order.
    /// A branch is cut when its partial volume cannot beat the incumbent,
    /// and once no point remains in reach the remaining axes jump to 1.
    pub fn max_empty_star(&self, ps: &PointSet) -> Result<EmptyBoxReport> {
        let start = Instant::now();
        ps.ensure_unit_cube()?;
        let d = ps.dim();
        let grid = grid_of(ps, false, true);
        let pts = ps.points();
        let n = pts.len();
        let open: Vec<Vec<Mask>> = (0..d)
            .map(|j| grid.axes[j].iter().map(|x| Mask::from_fn(n, |i| pts[i].point[j] < *x)).collect())
            .collect();

        struct Walk<'a> {
            axes: &'a [Vec<Rational>],
            open: &'a [Vec<Mask>],
            corner: Vec<usize>,
            out: Partial<Vec<usize>>,
        }

        impl Walk<'_> {
            fn descend(&mut self, j: usize, om: &Mask, vol: &Rational) {
                if !self.out.beaten_by(vol) {
                    return;
                }
                if om.is_empty() {
                    self.out.evaluated += 1;
                    let mut corner = self.corner.clone();
                    for (jj, c) in corner.iter_mut().enumerate().skip(j) {
                        *c = self.axes[jj].len() - 1;
                    }
                    self.out.offer(vol.clone(), || corner);
                    return;
                }
                if j == self.axes.len() {
                    self.out.evaluated += 1;
                    return;
                }
                for g in 0..self.axes[j].len() {
                    self.corner[j] = g;
                    let v = vol * &self.axes[j][g];
                    self.descend(j + 1, &om.and(&self.open[j][g]), &v);
                }
            }
        }

        let parts = self.run_partitions(grid.axes[0].len(), |g0| {
            let mut w = Walk { axes: &grid.axes, open: &open, corner: vec![0; d], out: Partial::new() };
            w.corner[0] = g0;
            w.descend(1, &open[0][g0], &grid.axes[0][g0]);
            w.out
        });
        let (best, evaluated) = merge(parts);
        let best = best.expect("the all-minimum corner is always empty");
        let upper = Point(best.key.iter().enumerate().map(|(j, &g)| grid.axes[j][g].clone()).collect());
        Ok(EmptyBoxReport {
            volume: best.value,
            witness: Range::Anchored(AnchoredBox::new(upper, Closure::Open)),
            candidates_evaluated: evaluated,
            elapsed: start.elapsed(),
        })
    }

    /// Largest open box `(a, b)` containing no point, by the same
    /// residual-volume branch and bound over grid intervals.
    pub fn max_empty_box(&self, ps: &PointSet) -> Result<EmptyBoxReport> {
        let start = Instant::now();
        ps.ensure_unit_cube()?;
        let d = ps.dim();
        let grid = grid_of(ps, true, true);
        let pts = ps.points();
        let n = pts.len();
        let pairs: Vec<Vec<(usize, usize)>> = grid.axes.iter().map(|a| interval_pairs(a.len())).collect();
        let lengths: Vec<Vec<Rational>> =
            (0..d).map(|j| pairs[j].iter().map(|&(a, b)| &grid.axes[j][b] - &grid.axes[j][a]).collect()).collect();
        let open: Vec<Vec<Mask>> = (0..d)
            .map(|j| {
                let ax = &grid.axes[j];
                pairs[j]
                    .iter()
                    .map(|&(a, b)| Mask::from_fn(n, |i| ax[a] < pts[i].point[j] && pts[i].point[j] < ax[b]))
                    .collect()
            })
            .collect();
        // (0, 1) is the pair (first, last) of each axis
        let full: Vec<usize> = grid
            .axes
            .iter()
            .zip(&pairs)
            .map(|(ax, p)| p.iter().position(|&(a, b)| a == 0 && b == ax.len() - 1).expect("sentinels present"))
            .collect();

        struct Walk<'a> {
            lengths: &'a [Vec<Rational>],
            open: &'a [Vec<Mask>],
            full: &'a [usize],
            choice: Vec<usize>,
            out: Partial<Vec<usize>>,
        }

        impl Walk<'_> {
            fn descend(&mut self, j: usize, om: &Mask, vol: &Rational) {
                if !self.out.beaten_by(vol) {
                    return;
                }
                if om.is_empty() {
                    self.out.evaluated += 1;
                    let mut choice = self.choice.clone();
                    choice[j..].copy_from_slice(&self.full[j..]);
                    self.out.offer(vol.clone(), || choice);
                    return;
                }
                if j == self.lengths.len() {
                    self.out.evaluated += 1;
                    return;
                }
                for p in 0..self.lengths[j].len() {
                    self.choice[j] = p;
                    let v = vol * &self.lengths[j][p];
                    self.descend(j + 1, &om.and(&self.open[j][p]), &v);
                }
            }
        }

        let parts = self.run_partitions(pairs[0].len(), |p0| {
            let mut w = Walk { lengths: &lengths, open: &open, full: &full, choice: vec![0; d], out: Partial::new() };
            w.choice[0] = p0;
            w.descend(1, &open[0][p0], &lengths[0][p0]);
            w.out
        });
        let (best, evaluated) = merge(parts);
        let best = best.expect("degenerate boxes are always empty");
        let witness = box_from_choice(&grid.axes, &pairs, &best.key, Closure::Open);
        Ok(EmptyBoxReport {
            volume: best.value,
            witness: Range::Box(witness),
            candidates_evaluated: evaluated,
            elapsed: start.elapsed(),
        })
    }
}

fn box_from_choice(axes: &[Vec<Rational>], pairs: &[Vec<(usize, usize)>], choice: &[usize], closure: Closure) -> AxisBox {
    let (lower, upper): (Vec<Rational>, Vec<Rational>) = choice
        .iter()
        .enumerate()
        .map(|(j, &p)| {
            let (a, b) = pairs[j][p];
            (axes[j][a].clone(), axes[j][b].clone())
        })
        .unzip();
    AxisBox { lower: Point(lower), upper: Point(upper), closure }
}
