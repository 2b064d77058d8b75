//! Group-theoretic side results, checked group by group over the catalog.

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::Catalog;
use super::quotient::{find_quotients, iso_type, QuotientWitness};
use crate::permgrp::{coset_action, is_isomorphic, make_group, GroupKind, PermGroup};
use crate::treegrp::AmalgamSpec;

/// A generating configuration `(U, V)` with `U ∩ V` cyclic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Configuration {
    /// `U = D3`, `V = D2`, sharing an involution.
    A,
    /// `U = D3`, `V = A4`, sharing an element of order 3.
    B,
}

impl Configuration {
    pub fn tag(self) -> &'static str {
        match self {
            Configuration::A => "(a)",
            Configuration::B => "(b)",
        }
    }

    /// The amalgam whose quotients realise this configuration.
    pub fn amalgam_name(self) -> &'static str {
        match self {
            Configuration::A => "D2 *_Z2 D3",
            Configuration::B => "D3 *_Z3 A4",
        }
    }
}

/// Witnesses whose images meet exactly in the image of the shared cyclic
/// group.
pub fn exact_intersection_witnesses(a: &AmalgamSpec, g: &PermGroup) -> Vec<QuotientWitness> {
    let m = a.edge_order as usize;
    find_quotients(a, g)
        .into_iter()
        .filter(|w| {
            let iu = w.hom_u.image();
            let iv = w.hom_v.image();
            iu.elements().iter().filter(|x| iv.contains(x)).count() == m
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigurationHit {
    pub configuration: Configuration,
    pub order: usize,
    pub group_name: String,
    pub iso_type: String,
    pub witness_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixA1Report {
    pub orders_searched: Vec<(usize, usize)>,
    pub hits: Vec<ConfigurationHit>,
    /// Order 48, (a): realised, and only by `S4 x C2`.
    pub order48_a_only_s4xc2: bool,
    pub order48_b_empty: bool,
    pub order72_empty: bool,
}

impl AppendixA1Report {
    pub fn passed(&self) -> bool {
        self.order48_a_only_s4xc2 && self.order48_b_empty && self.order72_empty
    }
}

fn s4_times_c2() -> PermGroup {
    let s4 = make_group(GroupKind::Symmetric(4)).expect("S4");
    let c2 = make_group(GroupKind::Cyclic(2)).expect("C2");
    make_group(GroupKind::DirectProduct(s4, c2)).expect("S4 x C2")
}

/// Search both configurations over the order-48 and order-72 groups.
pub fn verify_appendix_a1(catalog: &Catalog, amalgams: &[(String, AmalgamSpec)]) -> AppendixA1Report {
    let pick = |c: Configuration| amalgams.iter().map(|(_, a)| a).find(|a| a.name == c.amalgam_name());
    let mut jobs = Vec::new();
    for c in [Configuration::A, Configuration::B] {
        let Some(a) = pick(c) else { continue };
        for order in [48, 72] {
            for r in catalog.of_order(order) {
                jobs.push((c, a, r));
            }
        }
    }
    let hits: Vec<ConfigurationHit> = jobs
        .par_iter()
        .filter_map(|&(c, a, r)| {
            let ws = exact_intersection_witnesses(a, &r.group);
            (!ws.is_empty()).then(|| ConfigurationHit {
                configuration: c,
                order: r.order,
                group_name: r.name.clone(),
                iso_type: iso_type(&r.group, &r.name),
                witness_count: ws.len(),
            })
        })
        .collect();
    let reference = s4_times_c2();
    let a48: Vec<&ConfigurationHit> =
        hits.iter().filter(|h| h.configuration == Configuration::A && h.order == 48).collect();
    let order48_a_only_s4xc2 = a48.len() == 1 && a48[0].iso_type == reference.display_name();
    let complete = pick(Configuration::A).is_some() && pick(Configuration::B).is_some();
    AppendixA1Report {
        orders_searched: [48, 72].iter().map(|&o| (o, catalog.of_order(o).count())).collect(),
        order48_a_only_s4xc2: complete && order48_a_only_s4xc2,
        order48_b_empty: complete && !hits.iter().any(|h| h.configuration == Configuration::B && h.order == 48),
        order72_empty: complete && !hits.iter().any(|h| h.order == 72),
        hits,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SylowFiveRow {
    pub group_name: String,
    pub count: usize,
    pub iso_a5: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixA2Report {
    pub rows: Vec<SylowFiveRow>,
    /// Every group with more than one 5-Sylow is `A5`.
    pub implication_holds: bool,
    /// Exactly one such group, with six 5-Sylows.
    pub unique_with_six: bool,
}

impl AppendixA2Report {
    pub fn passed(&self) -> bool {
        self.implication_holds && self.unique_with_six
    }
}

/// 5-Sylow counts of the order-60 groups.
pub fn verify_appendix_a2(catalog: &Catalog) -> AppendixA2Report {
    let a5 = make_group(GroupKind::Alternating(5)).expect("A5");
    let recs: Vec<_> = catalog.of_order(60).collect();
    let rows: Vec<SylowFiveRow> = recs
        .par_iter()
        .map(|r| {
            let (_, count) = r.group.sylow(5).expect("5 is prime");
            SylowFiveRow { group_name: r.name.clone(), count, iso_a5: is_isomorphic(&r.group, &a5) }
        })
        .collect();
    let many: Vec<&SylowFiveRow> = rows.iter().filter(|r| r.count > 1).collect();
    AppendixA2Report {
        implication_holds: many.iter().all(|r| r.iso_a5),
        unique_with_six: many.len() == 1 && many[0].count == 6,
        rows,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub group_name: String,
    pub order: usize,
    pub checks: Vec<LemmaCheck>,
    pub kernel_order: usize,
    pub image_order: usize,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Sylow and permutation-representation checks for a group with a
/// generating configuration. `x` is the image of an order-3 element of the
/// `D3` factor.
pub fn verify_appendix_lemmas(g: &PermGroup, w: &QuotientWitness, a: &AmalgamSpec) -> LemmaReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(LemmaCheck { name: name.to_string(), passed, detail })
    };
    let (_, n2) = g.sylow(2).expect("prime");
    push("2-Sylow subgroups not normal", n2 > 1, format!("n_2 = {n2}"));
    let (p3, n3) = g.sylow(3).expect("prime");
    push("3-Sylow subgroups not normal", n3 > 1, format!("n_3 = {n3}"));
    push("exactly four 3-Sylow subgroups", n3 == 4, format!("n_3 = {n3}"));

    // the action on 3-Sylows is the coset action on the normalizer of one
    let norm = g.normalizer(&p3).expect("subgroup");
    let rho = coset_action(g, &norm).expect("subgroup");
    let k = rho.kernel();
    let x = match a.u.elements().iter().find(|e| e.order() == 3) {
        Some(e) => w.hom_u.apply(e),
        None => a.v.elements().iter().find(|e| e.order() == 3).and_then(|e| w.hom_v.apply(e)),
    }
    .expect("the D3 factor has an element of order 3");
    push("x not in K", !k.contains(x), format!("x = {x}, |K| = {}", k.order()));
    let image_order = rho.image().order();
    let expected_k = g.order() / 24;
    push(
        "rho(G) has order 24",
        image_order == 24 && (g.order() == 48 || g.order() == 72) && k.order() == expected_k,
        format!("|rho(G)| = {image_order}, |K| = {}", k.order()),
    );
    LemmaReport {
        group_name: g.display_name(),
        order: g.order(),
        checks,
        kernel_order: k.order(),
        image_order,
    }
}
