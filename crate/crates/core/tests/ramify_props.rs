use lame_core::exactalg::int;
use lame_core::permgrp::is_prime;
use lame_core::ramify::{brute_force_rh, rh_term, solve_rh, tame_order, RamPoint};
use proptest::prelude::*;

#[test]
fn unique_type_for_all_small_characteristics() {
    for p in std::iter::once(0).chain((5..=97).filter(|&p| is_prime(p))) {
        let s = solve_rh(p).unwrap();
        assert_eq!(s.len(), 1, "p = {p}");
        assert_eq!(s[0].tame_orders().unwrap(), vec![2, 2, 2, 3], "p = {p}");
    }
}

#[test]
fn pruning_bound_holds_post_hoc() {
    for p in [0u64, 2, 3, 5, 7] {
        let brute = brute_force_rh(p, 1000, 6).unwrap();
        let pruned = solve_rh(p).unwrap();
        assert_eq!(brute, pruned, "p = {p}");
    }
}

#[test]
fn automorphism_order_is_twelve_g_minus_one() {
    for g in 2..=50u64 {
        assert_eq!(tame_order(g, &[2, 2, 2, 3]).unwrap(), int(12 * (g as i64 - 1)));
    }
}

proptest! {
    #[test]
    fn term_grows_with_wild_part(n in 1u64..20, t in 1u32..4, pi in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 13][pi];
        let (Ok(a), Ok(b)) = (RamPoint::new(n, t, p), RamPoint::new(n, t + 1, p)) else { return Ok(()) };
        prop_assert!(rh_term(&a) < rh_term(&b));
    }

    #[test]
    fn term_shrinks_with_tame_part_when_wild(n in 1u64..20, t in 1u32..4, pi in 0usize..6) {
        // for p^t > 2 the term is positive and decreasing in n
        let p = [2u64, 3, 5, 7, 11, 13][pi];
        let (Ok(a), Ok(b)) = (RamPoint::new(n, t, p), RamPoint::new(n + 1, t, p)) else { return Ok(()) };
        if p.pow(t) > 2 {
            prop_assert!(rh_term(&a) > rh_term(&b));
        } else {
            prop_assert_eq!(rh_term(&a), rh_term(&b));
        }
    }
}
