use lame_core::permgrp::{coset_action, is_isomorphic, make_group, monomorphisms, GroupKind, Perm, PermGroup};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn small_group(n: usize) -> impl Strategy<Value = PermGroup> {
    prop::collection::vec(perm(n), 1..=2).prop_map(move |g| PermGroup::generate(n, g).unwrap())
}

fn core_of(g: &PermGroup, h: &PermGroup) -> Vec<Perm> {
    h.elements()
        .iter()
        .filter(|x| g.elements().iter().all(|c| h.contains(&x.conjugate_by(c))))
        .cloned()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_a_group(g in small_group(6)) {
        for a in g.elements() {
            prop_assert!(g.contains(&a.inverse()));
        }
        for a in g.elements().iter().take(12) {
            for b in g.elements() {
                prop_assert!(g.contains(&(a * b)));
            }
        }
        prop_assert_eq!(720 % g.order(), 0);
    }

    #[test]
    fn sylow_theorems(g in small_group(6)) {
        for p in [2u64, 3, 5] {
            let (s, count) = g.sylow(p).unwrap();
            let mut pa = 1;
            while g.order() % (pa * p as usize) == 0 {
                pa *= p as usize;
            }
            prop_assert_eq!(s.order(), pa);
            prop_assert_eq!(count as u64 % p, 1);
            prop_assert_eq!((g.order() / pa) % count, 0);
        }
    }

    #[test]
    fn coset_kernel_is_core(g in small_group(5), k in 0usize..120) {
        prop_assume!(g.order() <= 60);
        let sub = g.subgroup(&[g.element(k % g.order()).clone()]).unwrap();
        let act = coset_action(&g, &sub).unwrap();
        let core = core_of(&g, &sub);
        let ker = act.kernel();
        prop_assert_eq!(ker.order(), core.len());
        prop_assert!(core.iter().all(|c| ker.contains(c)));
        prop_assert_eq!(act.target().degree(), g.order() / sub.order());
    }

    #[test]
    fn isomorphism_is_an_equivalence(a in small_group(5), b in small_group(5), c in small_group(5)) {
        prop_assert!(is_isomorphic(&a, &a));
        prop_assert_eq!(is_isomorphic(&a, &b), is_isomorphic(&b, &a));
        if is_isomorphic(&a, &b) && is_isomorphic(&b, &c) {
            prop_assert!(is_isomorphic(&a, &c));
        }
    }

    #[test]
    fn conjugates_permute_monomorphisms(k in 0usize..24) {
        let d4 = make_group(GroupKind::Dihedral(4)).unwrap();
        let s4 = make_group(GroupKind::Symmetric(4)).unwrap();
        let homs = monomorphisms(&d4, &s4, None).unwrap();
        let g = s4.element(k).clone();
        for h in &homs {
            let c = h.conjugated(&g).unwrap();
            prop_assert!(homs.contains(&c));
        }
    }
}

#[test]
fn dihedral_subgroup_of_s4_times_c2() {
    let g = make_group(GroupKind::DirectProduct(
        make_group(GroupKind::Symmetric(4)).unwrap(),
        make_group(GroupKind::Cyclic(2)).unwrap(),
    ))
    .unwrap();
    let gamma = Perm::parse("(5,6)", 6).unwrap();
    let x = &Perm::parse("(1,2)(3,4)", 6).unwrap() * &gamma;
    let h = g.subgroup(&[x, Perm::parse("(1,2,3,4)", 6).unwrap()]).unwrap();
    assert_eq!(h.order(), 8);
    assert!(is_isomorphic(&h, &make_group(GroupKind::Dihedral(4)).unwrap()));
}

#[test]
fn monomorphism_counts() {
    // |Aut(D4)| = 8 and S4 has three dihedral subgroups of order 8
    let d4 = make_group(GroupKind::Dihedral(4)).unwrap();
    let s4 = make_group(GroupKind::Symmetric(4)).unwrap();
    assert_eq!(monomorphisms(&d4, &s4, None).unwrap().len(), 24);
    let a5 = make_group(GroupKind::Alternating(5)).unwrap();
    // Aut(A5) = S5
    assert_eq!(monomorphisms(&a5, &a5, None).unwrap().len(), 120);
}
