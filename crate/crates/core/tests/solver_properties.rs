use proptest::prelude::*;

use geodisc::geometry::{count_in_range, Color, Point, PointSet};
use geodisc::oracles::{naive_range_enumerate, separable_subset, NaiveProblem};
use geodisc::solvers::{feasible_point, LinearSystem, Side, Solver};
use geodisc::Rational;

fn coord() -> impl Strategy<Value = Rational> {
    (1i64..=8).prop_flat_map(|q| (0..=q).prop_map(move |p| Rational::new(p, q).unwrap()))
}

fn colored_set(max_d: usize, max_n: usize) -> impl Strategy<Value = PointSet> {
    (1..=max_d).prop_flat_map(move |d| {
        prop::collection::vec((prop::collection::vec(coord(), d), any::<bool>(), 1u64..=2), 1..=max_n).prop_map(move |pts| {
            let mut ps = PointSet::new(d).unwrap();
            for (c, blue, w) in pts {
                ps.push_point(Point(c), Some(if blue { Color::Blue } else { Color::Red }), w).unwrap();
            }
            ps
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn continuous_solvers_match_oracle(ps in colored_set(3, 8)) {
        let s = Solver::with_threads(1);
        prop_assert_eq!(s.star_discrepancy(&ps).unwrap().value, naive_range_enumerate(&ps, NaiveProblem::StarDiscrepancy).unwrap());
        prop_assert_eq!(s.box_discrepancy(&ps).unwrap().value, naive_range_enumerate(&ps, NaiveProblem::BoxDiscrepancy).unwrap());
        prop_assert_eq!(s.max_empty_star(&ps).unwrap().volume, naive_range_enumerate(&ps, NaiveProblem::MaxEmptyStar).unwrap());
        prop_assert_eq!(s.max_empty_box(&ps).unwrap().volume, naive_range_enumerate(&ps, NaiveProblem::MaxEmptyBox).unwrap());
    }

    #[test]
    fn combinatorial_solvers_match_oracle(ps in colored_set(3, 8)) {
        let s = Solver::with_threads(1);
        prop_assert_eq!(s.redblue_box_discrepancy(&ps).unwrap().value, naive_range_enumerate(&ps, NaiveProblem::RedBlueDiscrepancy).unwrap());
        if ps.color_weight(Color::Blue) > 0 {
            prop_assert_eq!(Rational::from(s.bichromatic_box(&ps, false).unwrap().value), naive_range_enumerate(&ps, NaiveProblem::BichromaticBox).unwrap());
            prop_assert_eq!(Rational::from(s.bichromatic_box(&ps, true).unwrap().value), naive_range_enumerate(&ps, NaiveProblem::BichromaticStar).unwrap());
        }
    }

    #[test]
    fn orderings_between_problems(ps in colored_set(3, 8)) {
        let s = Solver::with_threads(1);
        let star = s.star_discrepancy(&ps).unwrap();
        let boxed = s.box_discrepancy(&ps).unwrap();
        let estar = s.max_empty_star(&ps).unwrap();
        let ebox = s.max_empty_box(&ps).unwrap();
        prop_assert!(estar.volume <= ebox.volume);
        prop_assert!(star.value >= estar.volume);
        prop_assert!(boxed.value >= star.value);
        prop_assert!(boxed.value <= Rational::one() && !star.value.is_negative());
    }

    #[test]
    fn witnesses_reproduce_values(ps in colored_set(3, 8)) {
        let s = Solver::with_threads(1);
        let total = Rational::from(ps.total_weight());
        for rep in [s.star_discrepancy(&ps).unwrap(), s.box_discrepancy(&ps).unwrap()] {
            let inside = Rational::from(count_in_range(&ps, &rep.witness).unwrap().total()) / &total;
            let vol = rep.witness.volume().unwrap();
            let dev = match rep.side { Side::Excess => inside - vol, Side::Deficit => vol - inside };
            prop_assert_eq!(dev, rep.value);
        }
        for rep in [s.max_empty_star(&ps).unwrap(), s.max_empty_box(&ps).unwrap()] {
            prop_assert_eq!(count_in_range(&ps, &rep.witness).unwrap().total(), 0);
            prop_assert_eq!(rep.witness.volume().unwrap(), rep.volume);
        }
        if ps.color_weight(Color::Blue) > 0 {
            let rep = s.bichromatic_box(&ps, false).unwrap();
            match &rep.witness {
                Some(w) => {
                    let c = count_in_range(&ps, w).unwrap();
                    prop_assert_eq!(c.red, 0);
                    prop_assert_eq!(c.blue, rep.value);
                }
                // every blue point sits on a red one
                None => prop_assert_eq!(rep.value, 0),
            }
        }
    }

    #[test]
    fn order_isomorphism_invariance(ps in colored_set(3, 8)) {
        // x -> x^2 / 2 + x / 4 is strictly increasing on [0, 1]
        let warped = ps.map_coords(|_, x| x * x / Rational::from(2i64) + x / Rational::from(4i64));
        let s = Solver::with_threads(1);
        prop_assert_eq!(s.redblue_box_discrepancy(&ps).unwrap().value, s.redblue_box_discrepancy(&warped).unwrap().value);
        if ps.color_weight(Color::Blue) > 0 {
            prop_assert_eq!(s.bichromatic_box(&ps, false).unwrap().value, s.bichromatic_box(&warped, false).unwrap().value);
        }
    }

    #[test]
    fn halfspace_matches_subset_oracle(
        d in 1usize..=3,
        blues in prop::collection::vec(prop::collection::vec(coord(), 3), 1..=6),
        reds in prop::collection::vec(prop::collection::vec(coord(), 3), 0..=5),
        m in 0usize..=3,
    ) {
        let blues: Vec<Point> = blues.into_iter().map(|c| Point(c[..d].to_vec())).collect();
        let reds: Vec<Point> = reds.into_iter().map(|c| Point(c[..d].to_vec())).collect();
        let mut ps = PointSet::new(d).unwrap();
        for b in &blues { ps.push_point(b.clone(), Some(Color::Blue), 1).unwrap(); }
        for r in &reds { ps.push_point(r.clone(), Some(Color::Red), 1).unwrap(); }
        let rep = Solver::with_threads(1).bichromatic_halfspace(&ps, m as u64).unwrap();
        let want = m <= blues.len()
            && itertools::Itertools::combinations(blues.iter().cloned(), m).any(|s| separable_subset(&s, &reds));
        prop_assert_eq!(rep.feasible, want);
        if let Some(w) = rep.witness {
            let c = count_in_range(&ps, &w).unwrap();
            prop_assert_eq!(c.red, 0);
            prop_assert!(c.blue >= m as u64);
        }
    }

    #[test]
    fn simplex_solutions_are_feasible(rows in prop::collection::vec((prop::collection::vec(-4i64..=4, 2), -4i64..=4), 1..=6)) {
        let mut sys = LinearSystem::new(2);
        for (a, b) in &rows {
            sys.push(a.iter().map(|&x| Rational::from(x)).collect(), Rational::from(*b));
        }
        if let Some(x) = feasible_point(&sys) {
            for (a, b) in &rows {
                let lhs: Rational = a.iter().zip(&x).map(|(&c, v)| Rational::from(c) * v).sum();
                prop_assert!(lhs <= Rational::from(*b));
            }
        }
    }
}

#[test]
fn thread_count_does_not_change_witness() {
    let mut ps = PointSet::new(2).unwrap();
    for (i, (x, y)) in [(1, 5), (2, 3), (3, 7), (5, 2), (6, 6), (7, 1)].into_iter().enumerate() {
        let c = if i % 2 == 0 { Color::Blue } else { Color::Red };
        ps.push_point(Point(vec![Rational::new(x, 8).unwrap(), Rational::new(y, 8).unwrap()]), Some(c), 1).unwrap();
    }
    let one = Solver::with_threads(1);
    let many = Solver::with_threads(4);
    assert_eq!(one.star_discrepancy(&ps).unwrap().witness, many.star_discrepancy(&ps).unwrap().witness);
    assert_eq!(one.max_empty_box(&ps).unwrap().witness, many.max_empty_box(&ps).unwrap().witness);
    assert_eq!(one.bichromatic_box(&ps, false).unwrap().witness, many.bichromatic_box(&ps, false).unwrap().witness);
    let a = one.redblue_box_discrepancy(&ps).unwrap();
    let b = many.redblue_box_discrepancy(&ps).unwrap();
    assert_eq!((a.value, a.witness, a.candidates_evaluated), (b.value, b.witness, b.candidates_evaluated));
}
