use serde::Serialize;

use super::group::{prime_factors, PermGroup};
use super::hom::find_isomorphism;

/// Isomorphism invariants, computed once per group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)`, ascending.
    pub order_histogram: Vec<(u64, usize)>,
    pub center_order: usize,
    pub abelian_invariants: Vec<u64>,
    /// `(p, number of Sylow p-subgroups)` for each prime dividing the order.
    pub sylow_counts: Vec<(u64, usize)>,
    /// `(element order, class size)` for every conjugacy class, sorted.
    pub classes: Vec<(u64, usize)>,
}

pub fn fingerprint(g: &PermGroup) -> &Fingerprint {
    g.fingerprint_cell().get_or_init(|| {
        let mut classes: Vec<(u64, usize)> =
            g.conjugacy_classes().iter().map(|c| (g.element_order(c[0]), c.len())).collect();
        classes.sort_unstable();
        Fingerprint {
            order: g.order(),
            order_histogram: g.order_histogram().into_iter().collect(),
            center_order: g.center().order(),
            abelian_invariants: g.abelian_invariants(),
            sylow_counts: prime_factors(g.order() as u64)
                .into_iter()
                .map(|p| (p, g.sylow(p).expect("prime").1))
                .collect(),
            classes,
        }
    })
}

/// Exact isomorphism test: fingerprints first, then a generator-mapping search.
pub fn is_isomorphic(g: &PermGroup, h: &PermGroup) -> bool {
    if g.same_data(h) {
        return true;
    }
    if g.order() != h.order() || fingerprint(g) != fingerprint(h) {
        return false;
    }
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{make_group, GroupKind};

    fn grp(k: GroupKind) -> PermGroup {
        make_group(k).unwrap()
    }

    #[test]
    fn dihedral_three_is_s3() {
        assert!(is_isomorphic(&grp(GroupKind::Dihedral(3)), &grp(GroupKind::Symmetric(3))));
    }

    #[test]
    fn d6_is_not_a4() {
        let d6 = grp(GroupKind::Dihedral(6));
        let a4 = grp(GroupKind::Alternating(4));
        assert_ne!(fingerprint(&d6).order_histogram, fingerprint(&a4).order_histogram);
        assert!(!is_isomorphic(&d6, &a4));
    }

    #[test]
    fn s4_times_c2_two_ways() {
        let p = grp(GroupKind::DirectProduct(grp(GroupKind::Symmetric(4)), grp(GroupKind::Cyclic(2))));
        let q = PermGroup::from_cycle_strings(6, &["(1,4,6,3,5,2)", "(1,4)(3,5)"]).unwrap();
        assert_eq!(q.order(), 48);
        assert!(is_isomorphic(&p, &q));
    }

    #[test]
    fn quaternion_is_not_dihedral() {
        let q8 = PermGroup::from_cycle_strings(8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"]).unwrap();
        let d4 = grp(GroupKind::Dihedral(4));
        assert_eq!(q8.order(), 8);
        assert_eq!(fingerprint(&q8).center_order, fingerprint(&d4).center_order);
        assert!(!is_isomorphic(&q8, &d4));
    }

    #[test]
    fn explicit_isomorphism_between_representations() {
        // S4 acting on its four Sylow 3-subgroups
        let s4 = grp(GroupKind::Symmetric(4));
        let (p3, _) = s4.sylow(3).unwrap();
        let act = crate::permgrp::coset_action(&s4, &s4.normalizer(&p3).unwrap()).unwrap();
        let img = act.image();
        let iso = find_isomorphism(&s4, &img).expect("faithful action");
        assert!(iso.is_injective());
        assert!(is_isomorphic(&img, &s4));
    }
}
