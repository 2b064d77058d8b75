use std::fmt;

use rayon::prelude::*;

use super::group::PermGroup;
use super::perm::Perm;
use super::GroupError;

const UNSET: usize = usize::MAX;

/// A group homomorphism stored as a full element-to-element table.
#[derive(Clone)]
pub struct Hom {
    source: PermGroup,
    target: PermGroup,
    table: Vec<usize>,
}

impl Hom {
    /// The homomorphism sending `gens[i]` to `images[i]`, if it is well defined.
    ///
    /// `gens` must generate `source`; every relation is checked on the full
    /// Cayley graph of the source.
    pub fn from_images(
        source: &PermGroup,
        target: &PermGroup,
        gens: &[Perm],
        images: &[Perm],
    ) -> Result<Hom, GroupError> {
        if gens.len() != images.len() {
            return Err(GroupError::InvalidImages("generator and image counts differ".into()));
        }
        let gi = gens
            .iter()
            .map(|g| source.index_of(g).ok_or(GroupError::NotSubgroup))
            .collect::<Result<Vec<_>, _>>()?;
        let ii = images
            .iter()
            .map(|g| target.index_of(g).ok_or(GroupError::InvalidImages(format!("{g} not in target"))))
            .collect::<Result<Vec<_>, _>>()?;
        let table = extend_map(source, target, &gi, &ii)
            .ok_or_else(|| GroupError::InvalidImages("images violate a relation of the source".into()))?;
        if table.contains(&UNSET) {
            return Err(GroupError::InvalidImages("listed elements do not generate the source".into()));
        }
        Ok(Hom { source: source.clone(), target: target.clone(), table })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    /// Target index of the image of source element `i`.
    pub fn apply_index(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn apply(&self, p: &Perm) -> Option<&Perm> {
        self.source.index_of(p).map(|i| self.target.element(self.table[i]))
    }

    /// Images of the source's stored generators.
    pub fn generator_images(&self) -> Vec<Perm> {
        self.source.gens().iter().map(|g| self.apply(g).expect("generator").clone()).collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.table.iter().all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    /// Image as a subgroup of the target.
    pub fn image(&self) -> PermGroup {
        let mut idx = self.table.clone();
        idx.sort_unstable();
        idx.dedup();
        self.target.subgroup_from_indices(&idx)
    }

    pub fn kernel(&self) -> PermGroup {
        let members: Vec<usize> = (0..self.source.order()).filter(|&i| self.table[i] == 0).collect();
        self.source.subgroup_from_indices(&members)
    }

    /// Compose with conjugation by `g` in the target: `x -> g^-1 phi(x) g`.
    pub fn conjugated(&self, g: &Perm) -> Result<Hom, GroupError> {
        let gi = self.target.index_of(g).ok_or(GroupError::NotSubgroup)?;
        let table = self.table.iter().map(|&t| self.target.conj(t, gi)).collect();
        Ok(Hom { source: self.source.clone(), target: self.target.clone(), table })
    }
}

impl PartialEq for Hom {
    fn eq(&self, o: &Self) -> bool {
        self.source == o.source
            && self.target == o.target
            && self.source.gens().iter().all(|g| self.apply(g) == o.apply(g))
    }
}

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .source
            .gens()
            .iter()
            .map(|g| format!("{} -> {}", g, self.apply(g).expect("generator")))
            .collect();
        write!(f, "Hom[{}]", parts.join(", "))
    }
}

/// Extend generator images along the Cayley graph of `<gens>`.
///
/// Returns `None` on an inconsistency; entries outside `<gens>` stay unset.
fn extend_map(source: &PermGroup, target: &PermGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut table = vec![UNSET; source.order()];
    table[0] = 0;
    let mut queue = vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        k += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = source.mul(x, s);
            let ty = target.mul(table[x], t);
            if table[y] == UNSET {
                table[y] = ty;
                queue.push(y);
            } else if table[y] != ty {
                return None;
            }
        }
    }
    Some(table)
}

/// Generators of `u`, with `first` (if any) leading, redundant ones dropped,
/// and the rest in descending element order.
fn search_generators(u: &PermGroup, first: Option<usize>) -> Vec<usize> {
    let mut cands: Vec<usize> = u.gens().iter().map(|g| u.index_of(g).expect("generator")).collect();
    cands.sort_by_key(|&i| std::cmp::Reverse(u.element_order(i)));
    let mut out: Vec<usize> = first.into_iter().collect();
    let mut reached = u.generated_order(&out);
    for c in cands {
        if reached == u.order() {
            break;
        }
        out.push(c);
        let r = u.generated_order(&out);
        if r == reached {
            out.pop();
        } else {
            reached = r;
        }
    }
    out
}

/// Two-element generating set if one exists, preferring high element orders.
pub(crate) fn small_generators(u: &PermGroup) -> Vec<usize> {
    let base = search_generators(u, None);
    if base.len() <= 2 {
        return base;
    }
    let mut by_order: Vec<usize> = (1..u.order()).collect();
    by_order.sort_by_key(|&i| (std::cmp::Reverse(u.element_order(i)), i));
    for (k, &a) in by_order.iter().enumerate() {
        for &b in &by_order[k + 1..] {
            if u.generated_order(&[a, b]) == u.order() {
                return vec![a, b];
            }
        }
    }
    base
}

struct Search<'a> {
    u: &'a PermGroup,
    g: &'a PermGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn new<'a>(
        u: &'a PermGroup,
        g: &'a PermGroup,
        gens: Vec<usize>,
        allow: impl Fn(usize, usize) -> bool,
        pinned: Option<usize>,
    ) -> Search<'a> {
        let candidates = gens
            .iter()
            .enumerate()
            .map(|(k, &s)| match (k, pinned) {
                (0, Some(t)) => vec![t],
                _ => (0..g.order()).filter(|&t| g.element_order(t) == u.element_order(s) && allow(s, t)).collect(),
            })
            .collect();
        Search { u, g, gens, candidates }
    }

    /// Depth-first over generator images; `chosen` holds a consistent prefix.
    fn run(&self, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        let k = chosen.len();
        if k == self.gens.len() {
            let table = extend_map(self.u, self.g, &self.gens, chosen).expect("checked on extension");
            let mut seen = vec![false; self.g.order()];
            if table.iter().all(|&t| !std::mem::replace(&mut seen[t], true)) {
                out.push(table);
            }
            return;
        }
        for &t in &self.candidates[k] {
            chosen.push(t);
            if extend_map(self.u, self.g, &self.gens[..=k], chosen).is_some() {
                self.run(chosen, out, limit);
            }
            chosen.pop();
            if out.len() >= limit {
                return;
            }
        }
    }
}

/// All injective homomorphisms `u -> g`.
///
/// With an anchor `(a, b)` only maps sending `a` to `b` are returned. An
/// anchor whose two elements have different orders is reported as an error.
pub fn monomorphisms(u: &PermGroup, g: &PermGroup, anchor: Option<(&Perm, &Perm)>) -> Result<Vec<Hom>, GroupError> {
    let pinned = match anchor {
        None => None,
        Some((a, b)) => {
            let ai = u.index_of(a).ok_or(GroupError::NotSubgroup)?;
            let bi = g.index_of(b).ok_or(GroupError::InvalidImages(format!("{b} not in target")))?;
            if u.element_order(ai) != g.element_order(bi) {
                return Err(GroupError::AnchorOrderMismatch { from: u.element_order(ai), to: g.element_order(bi) });
            }
            Some((ai, bi))
        }
    };
    if !g.order().is_multiple_of(u.order()) {
        return Ok(Vec::new());
    }
    let gens = search_generators(u, pinned.map(|p| p.0));
    let search = Search::new(u, g, gens, |_, _| true, pinned.map(|p| p.1));
    let tables: Vec<Vec<usize>> = if search.gens.is_empty() {
        vec![vec![0]]
    } else {
        search.candidates[0]
            .par_iter()
            .flat_map_iter(|&t| {
                let mut chosen = vec![t];
                let mut out = Vec::new();
                if extend_map(u, g, &search.gens[..1], &chosen).is_some() {
                    search.run(&mut chosen, &mut out, usize::MAX);
                }
                out
            })
            .collect()
    };
    Ok(tables.into_iter().map(|table| Hom { source: u.clone(), target: g.clone(), table }).collect())
}

/// Some isomorphism `u -> g`, searched with class-size pruning.
pub fn find_isomorphism(u: &PermGroup, g: &PermGroup) -> Option<Hom> {
    if u.order() != g.order() {
        return None;
    }
    let class_of = |h: &PermGroup| {
        let mut size = vec![0usize; h.order()];
        for c in h.conjugacy_classes() {
            for &x in &c {
                size[x] = c.len();
            }
        }
        size
    };
    let (cu, cg) = (class_of(u), class_of(g));
    let gens = small_generators(u);
    let search = Search::new(u, g, gens, |s, t| cu[s] == cg[t], None);
    let mut out = Vec::new();
    search.run(&mut Vec::new(), &mut out, 1);
    out.pop().map(|table| Hom { source: u.clone(), target: g.clone(), table })
}

/// Action of `g` on the right cosets of `h`, as a map onto a permutation
/// group of degree `[g : h]`.
///
/// Cosets are numbered by their first element in `g`'s element order, so the
/// coset of `h` itself is point 0.
pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<Hom, GroupError> {
    if !h.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    let hidx = g.indices_of(h);
    let mut coset = vec![UNSET; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset[x] != UNSET {
            continue;
        }
        for &k in &hidx {
            coset[g.mul(k, x)] = reps.len();
        }
        reps.push(x);
    }
    let n = reps.len();
    let action = |e: usize| -> Perm {
        Perm::from_images(reps.iter().map(|&r| coset[g.mul(r, e)]).collect()).expect("coset action is a bijection")
    };
    let gen_images: Vec<Perm> = g.gens().iter().map(|s| action(g.index_of(s).expect("generator"))).collect();
    let target = PermGroup::generate_with_cap(n, gen_images, usize::MAX)?;
    let table = (0..g.order()).map(|e| target.index_of(&action(e)).expect("image element")).collect();
    Ok(Hom { source: g.clone(), target, table })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{make_group, GroupKind};

    fn grp(k: GroupKind) -> PermGroup {
        make_group(k).unwrap()
    }

    #[test]
    fn involutions_into_s3() {
        let c2 = grp(GroupKind::Cyclic(2));
        let s3 = grp(GroupKind::Symmetric(3));
        assert_eq!(monomorphisms(&c2, &s3, None).unwrap().len(), 3);
    }

    #[test]
    fn nonabelian_into_abelian_is_empty() {
        let d3 = grp(GroupKind::Dihedral(3));
        let c6 = grp(GroupKind::Cyclic(6));
        assert!(monomorphisms(&d3, &c6, None).unwrap().is_empty());
    }

    #[test]
    fn anchored_dihedral_in_s4_times_c2() {
        let d4 = grp(GroupKind::Dihedral(4));
        let g = PermGroup::from_cycle_strings(6, &["(1,2,3,4)", "(1,2)", "(5,6)"]).unwrap();
        let rot = d4.gens()[0].clone();
        let target = Perm::parse("(1,2,3,4)", 6).unwrap();
        let homs = monomorphisms(&d4, &g, Some((&rot, &target))).unwrap();
        assert!(!homs.is_empty());
        let expected = g
            .subgroup(&[Perm::parse("(1,2)(3,4)(5,6)", 6).unwrap(), target.clone()])
            .unwrap();
        assert_eq!(expected.order(), 8);
        assert!(homs.iter().any(|h| h.image() == expected));
        for h in &homs {
            assert_eq!(h.apply(&rot), Some(&target));
            assert!(h.is_injective());
        }
    }

    #[test]
    fn anchor_order_mismatch() {
        let c2 = grp(GroupKind::Cyclic(2));
        let s3 = grp(GroupKind::Symmetric(3));
        let three = Perm::parse("(1,2,3)", 3).unwrap();
        let err = monomorphisms(&c2, &s3, Some((&c2.gens()[0], &three))).unwrap_err();
        assert_eq!(err, GroupError::AnchorOrderMismatch { from: 2, to: 3 });
    }

    #[test]
    fn coset_actions() {
        let a5 = grp(GroupKind::Alternating(5));
        let (p5, _) = a5.sylow(5).unwrap();
        let n = a5.normalizer(&p5).unwrap();
        let act = coset_action(&a5, &n).unwrap();
        assert_eq!(act.target().degree(), 6);
        assert_eq!(act.kernel().order(), 1);

        let s4 = grp(GroupKind::Symmetric(4));
        let (p3, _) = s4.sylow(3).unwrap();
        let n3 = s4.normalizer(&p3).unwrap();
        assert_eq!(n3.order(), 6);
        let act = coset_action(&s4, &n3).unwrap();
        assert_eq!(act.target().degree(), 4);
        assert_eq!(act.kernel().order(), 1);

        let act = coset_action(&s4, &s4).unwrap();
        assert_eq!(act.target().degree(), 1);
        assert_eq!(act.kernel(), s4);
    }

    #[test]
    fn from_images_checks_relations() {
        let c4 = grp(GroupKind::Cyclic(4));
        let c2 = grp(GroupKind::Cyclic(2));
        let g = c4.gens()[0].clone();
        let h = Hom::from_images(&c4, &c2, std::slice::from_ref(&g), &[c2.gens()[0].clone()]).unwrap();
        assert_eq!(h.kernel().order(), 2);
        let s3 = grp(GroupKind::Symmetric(3));
        let bad = Perm::parse("(1,2,3)", 3).unwrap();
        assert!(Hom::from_images(&c4, &s3, &[g], &[bad]).is_err());
    }
}
