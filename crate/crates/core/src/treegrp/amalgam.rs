use super::label::VertexLabel;
use super::tree::TreeOfGroups;
use super::TreeError;
use crate::exactalg::{int, rat, Rational};
use crate::permgrp::{make_group, GroupKind, Perm, PermGroup};

/// Concrete data for `U *_Z V`: the two vertex groups as permutation groups
/// and a generator of the shared cyclic group in each.
#[derive(Clone, Debug)]
pub struct AmalgamSpec {
    pub u: PermGroup,
    pub v: PermGroup,
    pub z_u: Perm,
    pub z_v: Perm,
    pub u_label: VertexLabel,
    pub v_label: VertexLabel,
    pub edge_order: u64,
    pub name: String,
}

impl AmalgamSpec {
    pub fn euler_characteristic(&self) -> Rational {
        rat(1, self.u.order() as i64) + rat(1, self.v.order() as i64) - rat(1, self.edge_order as i64)
    }
}

/// The permutation group for a label, as built by [`make_group`].
pub fn vertex_group(l: VertexLabel) -> Result<PermGroup, TreeError> {
    let kind = match l {
        VertexLabel::Cyclic(n) => GroupKind::Cyclic(n as usize),
        VertexLabel::Dihedral(n) => GroupKind::Dihedral(n as usize),
        VertexLabel::A4 => GroupKind::Alternating(4),
        VertexLabel::S4 => GroupKind::Symmetric(4),
        VertexLabel::A5 => GroupKind::Alternating(5),
    };
    Ok(make_group(kind)?.named(&l.to_string()))
}

/// Canonical generator of a maximal cyclic subgroup of order `m` in the
/// group of label `l`.
pub fn canonical_cyclic_generator(l: VertexLabel, g: &PermGroup, m: u64) -> Result<Perm, TreeError> {
    let deg = g.degree();
    let cyc = |s: &str| Perm::parse(s, deg).expect("valid cycle string");
    let z = match (l, m) {
        (VertexLabel::Cyclic(n), _) if m == n => g.gens()[0].clone(),
        (VertexLabel::Dihedral(n), _) if m == n && n > 2 => g.gens()[0].clone(),
        (VertexLabel::Dihedral(2), 2) => g.gens()[0].clone(),
        // the reflection
        (VertexLabel::Dihedral(_), 2) => g.gens()[1].clone(),
        (VertexLabel::A4, 3) | (VertexLabel::S4, 3) | (VertexLabel::A5, 3) => cyc("(1,2,3)"),
        (VertexLabel::A4, 2) | (VertexLabel::A5, 2) => cyc("(1,2)(3,4)"),
        (VertexLabel::S4, 2) => cyc("(1,2)"),
        (VertexLabel::S4, 4) => cyc("(1,2,3,4)"),
        (VertexLabel::A5, 5) => cyc("(1,2,3,4,5)"),
        _ => return Err(TreeError::NotMaximalCyclic(format!("Z{m} in {l}"))),
    };
    debug_assert!(g.contains(&z));
    if z.order() != m || !is_maximal_cyclic(g, &z) {
        return Err(TreeError::NotMaximalCyclic(format!("Z{m} in {l}")));
    }
    Ok(z)
}

/// No element of larger order has `z` among its powers.
pub fn is_maximal_cyclic(g: &PermGroup, z: &Perm) -> bool {
    let m = z.order();
    g.elements().iter().all(|x| {
        let k = x.order();
        k <= m || !(1..k as i64).any(|e| x.pow(e) == *z)
    })
}

/// Permutation data for a two-vertex tree.
pub fn realize_amalgam(t: &TreeOfGroups) -> Result<AmalgamSpec, TreeError> {
    let (&[a, b], &[(_, _, m)]) = (t.vertices(), t.edges()) else {
        return Err(TreeError::Invalid("amalgam needs exactly two vertices".into()));
    };
    let u = vertex_group(a)?;
    let v = vertex_group(b)?;
    let z_u = canonical_cyclic_generator(a, &u, m)?;
    let z_v = canonical_cyclic_generator(b, &v, m)?;
    Ok(AmalgamSpec { u, v, z_u, z_v, u_label: a, v_label: b, edge_order: m, name: t.product_name() })
}

/// `1 - |G| * chi`, required to be an integer of at least 2.
pub fn expected_genus(chi: &Rational, group_order: u64) -> Result<u64, TreeError> {
    let g = int(1) - chi * int(group_order as i64);
    if !g.is_integer() || g < int(2) {
        return Err(TreeError::IncompatibleOrder { order: group_order, genus: g.to_string() });
    }
    Ok(g.to_integer().try_into().expect("small genus"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treegrp::enumerate_normalizer_trees;

    fn trees() -> Vec<TreeOfGroups> {
        enumerate_normalizer_trees(&[2, 2, 2, 3], 2, 30).unwrap()
    }

    #[test]
    fn realized_generators() {
        let ams: Vec<AmalgamSpec> = trees().iter().map(|t| realize_amalgam(t).unwrap()).collect();
        let d2d3 = &ams[0];
        assert_eq!(d2d3.z_u.to_string(), "(1,2)");
        assert_eq!(d2d3.z_v.order(), 2);
        let d4s4 = &ams[2];
        assert_eq!(d4s4.z_u.order(), 4);
        assert_eq!(d4s4.z_v.to_string(), "(1,2,3,4)");
        let d5a5 = &ams[3];
        assert_eq!(d5a5.z_u.order(), 5);
        assert_eq!(d5a5.z_v.to_string(), "(1,2,3,4,5)");
        for a in &ams {
            assert!(is_maximal_cyclic(&a.u, &a.z_u) && is_maximal_cyclic(&a.v, &a.z_v));
            assert_eq!(a.euler_characteristic(), rat(-1, 12));
        }
    }

    #[test]
    fn non_maximal_cyclic_rejected() {
        let d4 = vertex_group(VertexLabel::Dihedral(4)).unwrap();
        let sq = d4.gens()[0].pow(2);
        assert!(!is_maximal_cyclic(&d4, &sq));
        let s4 = vertex_group(VertexLabel::S4).unwrap();
        assert!(canonical_cyclic_generator(VertexLabel::S4, &s4, 6).is_err());
    }

    #[test]
    fn genus_from_order() {
        let chi = rat(-1, 12);
        assert_eq!(expected_genus(&chi, 48).unwrap(), 5);
        assert_eq!(expected_genus(&chi, 60).unwrap(), 6);
        assert_eq!(expected_genus(&chi, 84).unwrap(), 8);
        assert!(expected_genus(&chi, 50).is_err());
        assert!(expected_genus(&chi, 11).is_err());
        assert!(expected_genus(&rat(1, 12), 48).is_err());
    }
}
