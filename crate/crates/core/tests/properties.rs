use asymhollow::asymptotic::{is_asymptotically_hollow, Range, TupleA};
use asymhollow::proscriptive::{candidate_extensions, nontrivial_data, extension_bound, HorizonPolicy};
use asymhollow::simplex::{
    empty_sufficient, enumerate_non_extreme_points, facet_cotorsion_oracle, facet_volumes,
    functional_width, is_empty, is_hollow, n3_construction, width_one, width_one_functional,
    width_upper_bound, zero_sum_union, SimplexSpec,
};
use asymhollow::{rem_pos, Rat};
use itertools::Itertools;
use num_integer::Integer;
use proptest::prelude::*;

fn arb_spec() -> impl Strategy<Value = SimplexSpec> {
    (2i64..=48)
        .prop_flat_map(|d| (prop::collection::vec(1..d.max(2), 2..=4), Just(d)))
        .prop_map(|(a, d)| SimplexSpec::new(a, d).unwrap())
}

fn sorted_tuples(len: usize, lo: i64, hi: i64) -> impl Iterator<Item = TupleA> {
    (lo..=hi)
        .combinations_with_replacement(len)
        .map(|v| TupleA::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn empty_implies_hollow(spec in arb_spec()) {
        if is_empty(&spec) {
            prop_assert!(is_hollow(&spec).hollow);
        }
    }

    #[test]
    fn sufficient_conditions_imply_empty(spec in arb_spec()) {
        if empty_sufficient(&spec).is_some() {
            prop_assert!(is_empty(&spec));
        }
    }

    #[test]
    fn zero_sum_union_divides_k(spec in arb_spec()) {
        let u = zero_sum_union(&spec);
        if !u.is_empty() {
            let d = spec.d();
            let g = u.iter().fold(d, |g, &i| g.gcd(&spec.a()[i]));
            for p in enumerate_non_extreme_points(&spec) {
                prop_assert_eq!(p.k % (d / g), 0, "{} k={}", spec, p.k);
            }
        }
    }

    #[test]
    fn prefix_keeps_emptiness(spec in arb_spec(), prefix in prop::collection::vec(1i64..30, 1..=2)) {
        if is_empty(&spec) {
            let longer = spec.with_prefix(&prefix).unwrap();
            prop_assert!(is_empty(&longer), "{} -> {}", spec, longer);
        }
    }

    #[test]
    fn hollow_with_unit_volumes_is_empty(spec in arb_spec()) {
        let d = spec.d();
        let sum: i64 = spec.a().iter().sum();
        let units = spec.a().iter().all(|a| a.gcd(&d) == 1) && (sum - 1).gcd(&d) == 1;
        if units && is_hollow(&spec).hollow {
            prop_assert!(is_empty(&spec), "{}", spec);
        }
    }

    #[test]
    fn facet_volumes_match_minors(spec in arb_spec()) {
        let fv = facet_volumes(&spec);
        for (f, &v) in fv.volumes.iter().enumerate() {
            prop_assert_eq!(facet_cotorsion_oracle(&spec, f).unwrap(), v, "{} facet {}", spec, f);
        }
    }

    #[test]
    fn width_one_witness_has_width_one(spec in arb_spec()) {
        if let Some(subset) = width_one(&spec).unwrap() {
            let phi = width_one_functional(&spec, &subset).unwrap();
            prop_assert_eq!(functional_width(&spec, &phi), 1, "{} {:?}", spec, subset);
        }
    }

    #[test]
    fn width_bound_dominates_witness(spec in arb_spec()) {
        if width_one(&spec).unwrap().is_some() {
            if let Ok(b) = width_upper_bound(&spec) {
                prop_assert!(b.s >= 1);
            }
        }
    }

    #[test]
    fn trivial_tuples_give_hollow_simplices(
        rest in prop::collection::vec(1i64..20, 1..=3),
        big_n in 2i64..200,
    ) {
        let mut a = vec![1];
        a.extend(rest);
        let t = TupleA::new(a.clone()).unwrap();
        prop_assert!(is_asymptotically_hollow(&t, Range::Half).asymptotically_hollow);
        prop_assert!(is_hollow(&SimplexSpec::new(a, big_n).unwrap()).hollow);
    }

    #[test]
    fn proscribed_values_are_not_asymptotically_hollow(v in prop::collection::vec(2i64..=20, 2..=3)) {
        let b = TupleA::new(v).unwrap();
        for d in nontrivial_data(&b) {
            for t in 1..=40 {
                let iv = d.base_interval.dilate(t);
                for y in iv.lo.ceil()..iv.hi.ceil() {
                    let ext = b.extended(y).unwrap();
                    prop_assert!(
                        !is_asymptotically_hollow(&ext, Range::Half).asymptotically_hollow,
                        "b={} datum=({}, {}) y={}", b, d.i, d.m, y
                    );
                }
            }
        }
    }
}

#[test]
fn pair_construction_covers_large_n() {
    for a in 2..=8i64 {
        for x in a..=8 {
            for big_n in 1..=150 {
                if (big_n - x) * (a - 1) < x * x {
                    continue;
                }
                let c = n3_construction(a, x, big_n).unwrap();
                let hollow = is_hollow(&SimplexSpec::new(vec![a, x], big_n).unwrap()).hollow;
                assert!(!hollow || c.lambda_sum == Rat::int(1), "a={a} x={x} N={big_n}");
            }
        }
    }
}

#[test]
fn half_and_full_ranges_agree() {
    for len in 2..=4 {
        for a in sorted_tuples(len, 1, 30) {
            assert_eq!(
                is_asymptotically_hollow(&a, Range::Half).asymptotically_hollow,
                is_asymptotically_hollow(&a, Range::Full).asymptotically_hollow,
                "{a}"
            );
        }
    }
}

#[test]
fn pairs_are_never_nontrivially_asymptotically_hollow() {
    for a in sorted_tuples(2, 2, 10) {
        assert!(!is_asymptotically_hollow(&a, Range::Full).asymptotically_hollow, "{a}");
    }
}

#[test]
fn quadruple_with_two_inequality() {
    for b in 2..=25i64 {
        for d in 2..=25i64 {
            for c in [b + 1, b + 1 + d, (b + 1) % d + d] {
                if c < 2 {
                    continue;
                }
                for t in (1..).take_while(|&t| 2 * t < d) {
                    let lhs = rem_pos(d, 2 * t).unwrap() + rem_pos(d, b * t).unwrap() + rem_pos(d, c * t).unwrap();
                    assert!(lhs <= t + 2 * d, "b={b} c={c} d={d} t={t}");
                }
            }
        }
    }
}

#[test]
fn all_trivial_data_means_asymptotically_hollow() {
    for len in 2..=3 {
        for b in sorted_tuples(len, 1, 20) {
            if nontrivial_data(&b).is_empty() {
                assert!(is_asymptotically_hollow(&b, Range::Half).asymptotically_hollow, "{b}");
            }
        }
    }
}

#[test]
fn candidates_stay_below_every_ray_start() {
    for len in 2..=3 {
        for b in sorted_tuples(len, 2, 14) {
            let report = candidate_extensions(&b, HorizonPolicy::Derived).unwrap();
            if report.infinite {
                continue;
            }
            let Some(&top) = report.candidates.iter().max() else {
                continue;
            };
            for d in &report.nontrivial_data {
                let ray = d.base_interval.ray_start().unwrap();
                assert!(Rat::int(top) < ray, "b={b} y={top} datum=({}, {}) ray={ray}", d.i, d.m);
            }
        }
    }
}

#[test]
fn closed_form_bound_is_not_strict() {
    // (2,3,8) is asymptotically hollow, but the datum at entry 3, m = 1
    // gives 3 * (1 + 4 - 1) / 2 = 6
    let b = TupleA::new(vec![2, 3]).unwrap();
    assert_eq!(extension_bound(&b, 1, 1).unwrap(), Rat::int(6));
    assert!(is_asymptotically_hollow(&b.extended(8).unwrap(), Range::Full).asymptotically_hollow);
    let report = candidate_extensions(&b, HorizonPolicy::Derived).unwrap();
    assert!(report.candidates.contains(&8));
}
