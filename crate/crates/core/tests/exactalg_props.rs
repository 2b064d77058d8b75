use lame_core::exactalg::{
    gcd_univariate, parse_poly, perfect_square_form, print_poly, rat, resultant, FieldElem, FieldRef, MultiPoly,
    NumberField,
};
use proptest::prelude::*;

fn elem(k: &FieldRef, a: (i64, i64), b: (i64, i64)) -> FieldElem {
    FieldElem::new(k, rat(a.0, a.1), rat(b.0, b.1))
}

fn small_rat() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

prop_compose! {
    fn terms(arity: usize, max_terms: usize, max_deg: u32)
        (t in prop::collection::vec(
            (prop::collection::vec(0..=max_deg, arity), small_rat(), small_rat()),
            0..=max_terms))
        -> Vec<(Vec<u32>, (i64, i64), (i64, i64))> { t }
}

type Term = (Vec<u32>, (i64, i64), (i64, i64));

fn build(k: &FieldRef, arity: usize, t: &[Term]) -> MultiPoly {
    MultiPoly::from_terms(k, arity, t.iter().map(|(e, a, b)| (e.clone(), elem(k, *a, *b)))).unwrap()
}

fn fields() -> impl Strategy<Value = FieldRef> {
    prop_oneof![Just(NumberField::rationals()), Just(NumberField::eisenstein())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(k in fields(), a in terms(3, 4, 2), b in terms(3, 4, 2), c in terms(3, 4, 2)) {
        let (a, b, c) = (build(&k, 3, &a), build(&k, 3, &b), build(&k, 3, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(k in fields(), a in terms(2, 3, 2), b in terms(2, 3, 2)) {
        let (a, b) = (build(&k, 2, &a), build(&k, 2, &b));
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn planted_common_factor_kills_resultant(
        k in fields(), r in small_rat(), f in terms(1, 3, 3), g in terms(1, 3, 3)
    ) {
        let x = MultiPoly::var(&k, 1, 0);
        let lin = &x - &MultiPoly::constant(&elem(&k, r, (0, 1)), 1);
        let (f, g) = (build(&k, 1, &f), build(&k, 1, &g));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let res = resultant(&(&f * &lin), &(&g * &lin), 0).unwrap();
        prop_assert!(res.is_zero());
    }

    #[test]
    fn resultant_vanishes_iff_gcd_nonconstant(k in fields(), f in terms(1, 4, 3), g in terms(1, 4, 3)) {
        let (f, g) = (build(&k, 1, &f), build(&k, 1, &g));
        prop_assume!(f.total_degree().unwrap_or(0) > 0 && g.total_degree().unwrap_or(0) > 0);
        let res = resultant(&f, &g, 0).unwrap();
        let gcd = gcd_univariate(&f, &g).unwrap();
        prop_assert_eq!(res.is_zero(), !gcd.is_constant());
    }

    #[test]
    fn perfect_square_recovery(
        k in fields(),
        q in prop::collection::vec((small_rat(), small_rat()), 1..=3),
        s in small_rat(),
        p in small_rat(),
    ) {
        // root = x^m + q1 x^(m-1) y + ..., scalar = s + p*a
        let arity = 3;
        let m = q.len();
        let mut root = MultiPoly::monomial(&FieldElem::one(&k), vec![m as u32, 0, 0]);
        for (j, (qa, qb)) in q.iter().enumerate() {
            root = &root + &MultiPoly::monomial(&elem(&k, *qa, *qb), vec![(m - j - 1) as u32, (j + 1) as u32, 0]);
        }
        prop_assume!(s.0 != 0 || p.0 != 0);
        let scalar = &MultiPoly::constant(&elem(&k, s, (0, 1)), arity)
            + &MultiPoly::monomial(&elem(&k, p, (0, 1)), vec![0, 0, 1]);
        let f = &scalar * &root.pow(2);
        let ps = perfect_square_form(&f, 0, 1).unwrap().expect("square");
        prop_assert_eq!(&ps.scalar * &ps.root.pow(2), f);
        prop_assert_eq!(ps.root, root);
    }

    #[test]
    fn fixture_round_trip(k in fields(), a in terms(4, 6, 5)) {
        let a = build(&k, 4, &a);
        prop_assert_eq!(parse_poly(&print_poly(&a)).unwrap(), a);
    }
}
