use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{Catalog, CatalogRecord, IntegrityReport};
use super::ClassifyError;
use crate::permgrp::{is_isomorphic, make_group, monomorphisms, GroupKind, Hom, Perm, PermGroup};
use crate::treegrp::{enumerate_normalizer_trees, expected_genus, realize_amalgam, AmalgamSpec};

/// The four amalgams for ends `(2,2,2,3)`, tagged `(i)` to `(iv)` in
/// canonical order: `D2 *_Z2 D3`, `D3 *_Z3 A4`, `D4 *_Z4 S4`, `D5 *_Z5 A5`.
pub fn standard_amalgams() -> Result<Vec<(String, AmalgamSpec)>, ClassifyError> {
    let trees = enumerate_normalizer_trees(&[2, 2, 2, 3], 2, 30)?;
    let tags = ["(i)", "(ii)", "(iii)", "(iv)"];
    if trees.len() != tags.len() {
        return Err(ClassifyError::Unexpected(format!("{} trees for ends (2,2,2,3)", trees.len())));
    }
    trees.iter().zip(tags).map(|(t, tag)| Ok((tag.to_string(), realize_amalgam(t)?))).collect()
}

/// A surjection `U *_Z V -> G` injective on both factors.
#[derive(Clone, Debug)]
pub struct QuotientWitness {
    pub amalgam: String,
    pub hom_u: Hom,
    pub hom_v: Hom,
    pub genus: u64,
}

impl QuotientWitness {
    fn key(&self) -> (Vec<Perm>, Vec<Perm>) {
        (self.hom_u.generator_images(), self.hom_v.generator_images())
    }

    pub fn summary(&self, a: &AmalgamSpec) -> WitnessSummary {
        let show = |v: Vec<Perm>| v.iter().map(Perm::to_string).collect();
        WitnessSummary {
            u_generators: show(a.u.gens().to_vec()),
            u_images: show(self.hom_u.generator_images()),
            v_generators: show(a.v.gens().to_vec()),
            v_images: show(self.hom_v.generator_images()),
            z_image: self.hom_u.apply(&a.z_u).expect("z in U").to_string(),
        }
    }
}

/// Generator images of a witness in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSummary {
    pub u_generators: Vec<String>,
    pub u_images: Vec<String>,
    pub v_generators: Vec<String>,
    pub v_images: Vec<String>,
    pub z_image: String,
}

/// All pairs `(hom_u, hom_v)` of monomorphisms agreeing on the amalgamated
/// cyclic group whose images generate `g`.
///
/// Such a map has torsion-free kernel: a finite-order element of the
/// amalgam is conjugate into `U` or `V`, where the map is injective. A
/// torsion-free finite-index subgroup of the amalgam is free, of rank
/// `1 - |G| chi`.
pub fn find_quotients(a: &AmalgamSpec, g: &PermGroup) -> Vec<QuotientWitness> {
    let Ok(genus) = expected_genus(&a.euler_characteristic(), g.order() as u64) else {
        return Vec::new();
    };
    if !g.order().is_multiple_of(a.u.order()) || !g.order().is_multiple_of(a.v.order()) {
        return Vec::new();
    }
    let homs_u = monomorphisms(&a.u, g, None).expect("no anchor");
    let mut out = Vec::new();
    for hu in homs_u {
        let z = hu.apply(&a.z_u).expect("z in U").clone();
        let homs_v = monomorphisms(&a.v, g, Some((&a.z_v, &z))).expect("anchor orders agree");
        let u_imgs: Vec<usize> = (0..a.u.order()).map(|i| hu.apply_index(i)).collect();
        for hv in homs_v {
            let mut gens: Vec<usize> = a.u.gens().iter().map(|s| g.index_of(hu.apply(s).unwrap()).unwrap()).collect();
            gens.extend(a.v.gens().iter().map(|s| g.index_of(hv.apply(s).unwrap()).unwrap()));
            if g.generated_order(&gens) == g.order() {
                debug_assert!(u_imgs.contains(&hv.apply_index(a.v.index_of(&a.z_v).unwrap())));
                out.push(QuotientWitness { amalgam: a.name.clone(), hom_u: hu.clone(), hom_v: hv, genus });
            }
        }
    }
    out
}

/// Independent re-check of a witness: injectivity, shared generator,
/// generation and the genus formula.
pub fn revalidate(w: &QuotientWitness, a: &AmalgamSpec) -> Result<(), String> {
    let g = w.hom_u.target();
    if !w.hom_u.is_injective() || !w.hom_v.is_injective() {
        return Err("not injective".into());
    }
    if w.hom_u.apply(&a.z_u) != w.hom_v.apply(&a.z_v) {
        return Err("images of the amalgamated generator differ".into());
    }
    let mut gens = w.hom_u.generator_images();
    gens.extend(w.hom_v.generator_images());
    if PermGroup::generate(g.degree(), gens).map_err(|e| e.to_string())?.order() != g.order() {
        return Err("images do not generate".into());
    }
    let genus = expected_genus(&a.euler_characteristic(), g.order() as u64).map_err(|e| e.to_string())?;
    if genus != w.genus {
        return Err(format!("genus {} != {}", w.genus, genus));
    }
    Ok(())
}

/// One (genus, amalgam, group) line of the classification.
#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub genus: u64,
    pub amalgam: String,
    pub amalgam_tag: String,
    pub group_name: String,
    pub group_id: Option<String>,
    pub iso_type: String,
    pub witness_count: usize,
    pub witness: WitnessSummary,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenusSummary {
    pub genus: u64,
    pub group_order: usize,
    /// The catalog slice for this order failed its integrity checks.
    pub conditional: bool,
    pub groups_searched: usize,
    pub entries: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub genera: Vec<GenusSummary>,
    pub entries: Vec<ReportEntry>,
    pub notes: Vec<String>,
    /// Observations that contradict a too-narrow claim about an amalgam.
    pub discrepancies: Vec<String>,
}

impl ClassificationReport {
    /// `(amalgam tag, iso type)` pairs for one genus, sorted.
    pub fn cases(&self, genus: u64) -> Vec<(String, String)> {
        let mut v: Vec<(String, String)> = self
            .entries
            .iter()
            .filter(|e| e.genus == genus)
            .map(|e| (e.amalgam_tag.clone(), e.iso_type.clone()))
            .collect();
        v.sort();
        v
    }
}

fn reference_groups() -> Vec<PermGroup> {
    let s4 = make_group(GroupKind::Symmetric(4)).expect("S4");
    let c2 = make_group(GroupKind::Cyclic(2)).expect("C2");
    vec![
        make_group(GroupKind::DirectProduct(s4, c2)).expect("S4 x C2"),
        make_group(GroupKind::Alternating(5)).expect("A5"),
    ]
}

/// Name of `g` from the reference list, else the catalog name.
pub fn iso_type(g: &PermGroup, fallback: &str) -> String {
    reference_groups()
        .into_iter()
        .find(|r| r.order() == g.order() && is_isomorphic(r, g))
        .map(|r| r.display_name())
        .unwrap_or_else(|| fallback.to_string())
}

/// Run [`find_quotients`] for every amalgam against every catalog group of
/// order `12(g-1)`, `g = 5..8`.
pub fn classify_all(
    catalog: &Catalog,
    integrity: &IntegrityReport,
    amalgams: &[(String, AmalgamSpec)],
    genera: &[u64],
) -> ClassificationReport {
    let jobs: Vec<(u64, &(String, AmalgamSpec), &CatalogRecord)> = genera
        .iter()
        .flat_map(|&g| {
            let order = 12 * (g as usize - 1);
            amalgams.iter().flat_map(move |a| catalog.of_order(order).map(move |r| (g, a, r)))
        })
        .collect();
    let results: Vec<Option<ReportEntry>> = jobs
        .par_iter()
        .map(|&(genus, (tag, a), rec)| {
            let ws = find_quotients(a, &rec.group);
            let best = ws.iter().min_by(|x, y| x.key().cmp(&y.key()))?;
            debug_assert_eq!(best.genus, genus);
            Some(ReportEntry {
                genus,
                amalgam: a.name.clone(),
                amalgam_tag: tag.clone(),
                group_name: rec.name.clone(),
                group_id: rec.id.clone(),
                iso_type: iso_type(&rec.group, &rec.name),
                witness_count: ws.len(),
                witness: best.summary(a),
            })
        })
        .collect();
    let entries: Vec<ReportEntry> = results.into_iter().flatten().collect();
    let summaries = genera
        .iter()
        .map(|&g| {
            let order = 12 * (g as usize - 1);
            GenusSummary {
                genus: g,
                group_order: order,
                conditional: !integrity.order_complete(order),
                groups_searched: catalog.of_order(order).count(),
                entries: entries.iter().filter(|e| e.genus == g).count(),
            }
        })
        .collect();
    let mut notes: Vec<String> = amalgams
        .iter()
        .filter(|(_, a)| a.v_label.characteristic_note().is_some())
        .map(|(tag, a)| format!("{tag} {}: residue characteristic p > 5", a.name))
        .collect();
    notes.push("all vertex group orders must be prime to the residue characteristic".into());
    let mut discrepancies = Vec::new();
    if let Some(e) = entries.iter().find(|e| e.amalgam_tag == "(i)" && e.genus != 5) {
        discrepancies.push(format!(
            "amalgam (i) {} is not confined to genus 5: it also maps onto {} in genus {}",
            e.amalgam, e.iso_type, e.genus
        ));
    }
    ClassificationReport { genera: summaries, entries, notes, discrepancies }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amalgam(tag: &str) -> AmalgamSpec {
        standard_amalgams().unwrap().into_iter().find(|(t, _)| t == tag).unwrap().1
    }

    #[test]
    fn s4_amalgam_onto_s4_times_c2() {
        let a = amalgam("(iii)");
        let g = PermGroup::from_cycle_strings(6, &["(1,2,3,4)", "(1,2)", "(5,6)"]).unwrap();
        let ws = find_quotients(&a, &g);
        assert!(!ws.is_empty());
        let target = g
            .subgroup(&[Perm::parse("(1,2)(3,4)(5,6)", 6).unwrap(), Perm::parse("(1,2,3,4)", 6).unwrap()])
            .unwrap();
        assert!(ws.iter().any(|w| w.hom_u.image() == target));
        for w in &ws {
            revalidate(w, &a).unwrap();
            assert_eq!(w.genus, 5);
            // the two images share the cyclic group of order 4
            let z = w.hom_u.apply(&a.z_u).unwrap();
            assert!(w.hom_v.image().contains(z) && z.order() == 4);
        }
    }

    #[test]
    fn a5_amalgam_onto_a5() {
        let a = amalgam("(iv)");
        let a5 = make_group(GroupKind::Alternating(5)).unwrap();
        let ws = find_quotients(&a, &a5);
        assert!(!ws.is_empty());
        assert!(ws.iter().all(|w| w.genus == 6));
    }

    #[test]
    fn abelian_target_has_no_quotient() {
        let c48 = make_group(GroupKind::Cyclic(48)).unwrap();
        for (_, a) in standard_amalgams().unwrap() {
            assert!(find_quotients(&a, &c48).is_empty());
        }
    }
}
