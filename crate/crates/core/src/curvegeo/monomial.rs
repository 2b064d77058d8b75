use std::fmt;

use super::{CurveFamily, GeoError, ProjPoint, ARITY};
use crate::exactalg::MultiPoly;
use crate::permgrp::{Perm, PermGroup};

/// `x_i -> s_i x_{perm[i]}`, modulo the global sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialMap {
    perm: [usize; 3],
    signs: [i8; 3],
}

impl MonomialMap {
    pub fn new(perm: [usize; 3], signs: [i8; 3]) -> Result<Self, GeoError> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p > 2 || seen[p] {
                return Err(GeoError::Action(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|s| s.abs() != 1) {
            return Err(GeoError::Action("signs must be +1 or -1".into()));
        }
        let g = signs[0];
        Ok(MonomialMap { perm, signs: signs.map(|s| s * g) })
    }

    pub fn identity() -> Self {
        MonomialMap { perm: [0, 1, 2], signs: [1, 1, 1] }
    }

    pub fn perm(&self) -> [usize; 3] {
        self.perm
    }

    pub fn signs(&self) -> [i8; 3] {
        self.signs
    }

    /// Whether the underlying permutation of the coordinates is even.
    pub fn is_even(&self) -> bool {
        let p = self.perm;
        let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        inversions % 2 == 0
    }

    /// `self` after `other`: `p -> self(other(p))`.
    pub fn compose(&self, other: &MonomialMap) -> MonomialMap {
        // (self(q))_i = s_i q_{perm[i]} with q = other(p)
        let perm = self.perm.map(|i| other.perm[i]);
        let signs = [0, 1, 2].map(|i| self.signs[i] * other.signs[self.perm[i]]);
        MonomialMap::new(perm, signs).expect("closed")
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        let c = p.coords();
        let img = [0, 1, 2].map(|i| {
            let v = c[self.perm[i]].clone();
            if self.signs[i] < 0 {
                -v
            } else {
                v
            }
        });
        ProjPoint::new(img).expect("nonzero")
    }

    /// `f(m(x, y, z), a)`.
    pub fn apply_poly(&self, f: &MultiPoly) -> Result<MultiPoly, GeoError> {
        let k = f.field();
        let mut vals: Vec<MultiPoly> = (0..3)
            .map(|i| {
                let v = MultiPoly::var(k, ARITY, self.perm[i]);
                if self.signs[i] < 0 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        vals.push(MultiPoly::var(k, ARITY, 3));
        Ok(f.compose(&vals)?)
    }

    /// Whether `f` is fixed up to a nonzero constant.
    pub fn fixes(&self, f: &MultiPoly) -> Result<bool, GeoError> {
        let g = self.apply_poly(f)?;
        let (Some((ef, cf)), Some((eg, cg))) = (f.leading_term(), g.leading_term()) else {
            return Ok(f.is_zero() && g.is_zero());
        };
        if ef != eg {
            return Ok(false);
        }
        let c = cg.checked_div(&cf)?;
        Ok(g == f.scale(&c)?)
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z"];
        let parts: Vec<String> = (0..3)
            .map(|i| format!("{}{}", if self.signs[i] < 0 { "-" } else { "" }, names[self.perm[i]]))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The 24 classes, sorted.
pub fn monomial_maps() -> Vec<MonomialMap> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for p in perms {
        for s1 in [1, -1] {
            for s2 in [1, -1] {
                out.push(MonomialMap::new(p, [1, s1, s2]).expect("valid"));
            }
        }
    }
    out.sort();
    out
}

/// Maps fixing a family, with the abstract group they form.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    pub maps: Vec<MonomialMap>,
    /// Right-regular action on the 24 classes (degree 24).
    pub group: PermGroup,
}

impl Stabilizer {
    /// Group element corresponding to a map of the stabilizer.
    pub fn element_of(&self, m: &MonomialMap) -> Option<Perm> {
        self.maps.contains(m).then(|| regular_perm(m))
    }

    /// Map corresponding to a group element.
    pub fn map_of(&self, p: &Perm) -> Option<MonomialMap> {
        let all = monomial_maps();
        let id = all.iter().position(|m| *m == MonomialMap::identity())?;
        all.get(p.apply(id)).copied().filter(|m| self.maps.contains(m))
    }
}

fn regular_perm(m: &MonomialMap) -> Perm {
    let all = monomial_maps();
    let images: Vec<usize> = all
        .iter()
        .map(|c| {
            let d = m.compose(c);
            all.iter().position(|e| *e == d).expect("closed")
        })
        .collect();
    Perm::from_images(images).expect("bijection")
}

/// Monomial maps preserving the family identically in the parameter.
pub fn monomial_stabilizer(f: &CurveFamily) -> Result<Stabilizer, GeoError> {
    let mut maps = Vec::new();
    for m in monomial_maps() {
        if m.fixes(&f.poly)? {
            maps.push(m);
        }
    }
    let gens: Vec<Perm> = maps.iter().map(regular_perm).collect();
    let group = PermGroup::generate(24, gens)?.named(&format!("Stab({})", f.name));
    if group.order() != maps.len() {
        return Err(GeoError::Action("stabilizer is not closed under composition".into()));
    }
    Ok(Stabilizer { maps, group })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{is_isomorphic, make_group, GroupKind};

    #[test]
    fn twenty_four_classes() {
        let all = monomial_maps();
        assert_eq!(all.len(), 24);
        for a in &all {
            for b in &all {
                assert!(all.contains(&a.compose(b)));
            }
        }
        assert_eq!(MonomialMap::new([0, 1, 2], [-1, -1, -1]).unwrap(), MonomialMap::identity());
        assert!(MonomialMap::new([0, 0, 2], [1, 1, 1]).is_err());
    }

    #[test]
    fn stabilizers() {
        let q = monomial_stabilizer(&CurveFamily::quartic()).unwrap();
        assert_eq!(q.group.order(), 24);
        assert!(is_isomorphic(&q.group, &make_group(GroupKind::Symmetric(4)).unwrap()));
        let s = monomial_stabilizer(&CurveFamily::sextic()).unwrap();
        assert_eq!(s.group.order(), 12);
        assert!(is_isomorphic(&s.group, &make_group(GroupKind::Alternating(4)).unwrap()));
        assert!(s.maps.iter().all(MonomialMap::is_even));
        let c = monomial_stabilizer(&CurveFamily::fermat_cubic()).unwrap();
        assert_eq!(c.group.order(), 6);
        for m in &q.maps {
            assert_eq!(q.map_of(&q.element_of(m).unwrap()), Some(*m));
        }
    }
}
