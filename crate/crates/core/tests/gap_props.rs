//! Property tests for the gap engine.

use lonerun_core::gap::{
    finite_horizon_gap, gap_at_time, loneliness_bound, max_gap, max_gap_grid_oracle,
    nearest_int_dist, VelocityVector,
};
use lonerun_core::rat::{rat, rat_int, Rat};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (any::<i32>(), 1..2_000u32).prop_map(|(p, q)| Rat::new(BigInt::from(p), BigInt::from(q)))
}

/// Small positive rationals whose rescaled integer profile stays tiny,
/// keeping the exact sweep cheap inside proptest loops.
fn arb_small_positive_rat() -> impl Strategy<Value = Rat> {
    (1..=6u32, 1..=4u32).prop_map(|(p, q)| Rat::new(BigInt::from(p), BigInt::from(q)))
}

fn arb_velocity() -> impl Strategy<Value = VelocityVector> {
    prop::collection::vec(arb_small_positive_rat(), 1..=3)
        .prop_map(|v| VelocityVector::new(v).unwrap())
}

proptest! {
    #[test]
    fn canonical_fraction_strings_round_trip(p in any::<i64>(), q in 1..5_000_000u32) {
        let r = Rat::new(BigInt::from(p), BigInt::from(q));
        let s = lonerun_core::rat::to_pq_string(&r);
        prop_assert_eq!(lonerun_core::rat::parse_rat(&s).unwrap(), r);
    }

    #[test]
    fn dist_is_periodic_symmetric_and_bounded(x in arb_rat(), k in -50i64..50) {
        let d = nearest_int_dist(&x);
        prop_assert!(!d.is_negative());
        prop_assert!(d <= rat(1, 2));
        prop_assert_eq!(&d, &nearest_int_dist(&(&x + rat_int(k))));
        prop_assert_eq!(&d, &nearest_int_dist(&(-&x)));
    }

    #[test]
    fn max_gap_is_scale_invariant(v in arb_velocity(), c in arb_small_positive_rat()) {
        let scaled = VelocityVector::new(
            v.components().iter().map(|x| x * &c).collect()
        ).unwrap();
        prop_assert_eq!(max_gap(&v).value, max_gap(&scaled).value);
    }

    #[test]
    fn finite_horizon_is_lipschitz(
        v in prop::collection::vec(arb_small_positive_rat(), 1..=3),
        w in prop::collection::vec(arb_small_positive_rat(), 1..=3),
        t1 in arb_small_positive_rat(),
    ) {
        let n = v.len().min(w.len());
        let v = VelocityVector::new(v[..n].to_vec()).unwrap();
        let w = VelocityVector::new(w[..n].to_vec()).unwrap();
        let gv = finite_horizon_gap(&v, &t1).unwrap().value;
        let gw = finite_horizon_gap(&w, &t1).unwrap().value;
        let spread = v.components().iter().zip(w.components())
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap();
        prop_assert!((gv - gw).abs() <= &t1 * &spread);
    }

    #[test]
    fn finite_horizon_is_monotone_in_the_horizon(
        v in arb_velocity(),
        t1 in arb_small_positive_rat(),
        extra in arb_small_positive_rat(),
    ) {
        let t2 = &t1 + &extra;
        let g1 = finite_horizon_gap(&v, &t1).unwrap().value;
        let g2 = finite_horizon_gap(&v, &t2).unwrap().value;
        prop_assert!(g1 <= g2);
        // Denominators <= 4 cap the period at lcm(1..4) = 12.
        let gmax = finite_horizon_gap(&v, &rat_int(12)).unwrap().value;
        prop_assert_eq!(gmax, max_gap(&v).value);
    }

    #[test]
    fn witnesses_reproduce_their_values(v in arb_velocity()) {
        let report = max_gap(&v);
        prop_assert_eq!(gap_at_time(&v, &report.witness_time).unwrap(), report.value);
        let horizon = finite_horizon_gap(&v, &rat(7, 5)).unwrap();
        prop_assert_eq!(gap_at_time(&v, &horizon.witness_time).unwrap(), horizon.value);
        prop_assert!(horizon.witness_time <= rat(7, 5));
    }
}

fn ascending_combinations(n: usize, max: u64) -> Vec<Vec<u64>> {
    fn rec(n: usize, max: u64, start: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in start..=max {
            cur.push(v);
            rec(n, max, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max, 1, &mut Vec::new(), &mut out);
    out
}

// Every integer vector with n <= 4 distinct components <= 10 satisfies
// the conjectured bound. A violation here would be a counterexample and
// must fail loudly.
#[test]
fn conjecture_sanity_exhaustive() {
    for n in 1..=4usize {
        let bound = loneliness_bound(n);
        for combo in ascending_combinations(n, 10) {
            let v = VelocityVector::from_integers(&combo).unwrap();
            let report = max_gap(&v);
            assert!(
                report.value >= bound,
                "CONJECTURE COUNTEREXAMPLE? max_gap({combo:?}) = {} < 1/{}",
                report.value,
                n + 1
            );
        }
    }
}

// Light version of the sweep-vs-grid agreement (the acceptance suite
// runs the full 20000-step pass over components <= 12).
#[test]
fn grid_oracle_never_beats_the_sweep() {
    for n in 1..=2usize {
        for combo in ascending_combinations(n, 8) {
            let v = VelocityVector::from_integers(&combo).unwrap();
            let exact = max_gap(&v);
            let grid = max_gap_grid_oracle(&v, 2_000).unwrap();
            assert!(grid.value <= exact.value, "{combo:?}");
            let max_v = rat_int(*combo.iter().max().unwrap() as i64);
            assert!(
                &exact.value - &grid.value <= max_v / rat_int(2_000),
                "{combo:?}"
            );
        }
    }
}
