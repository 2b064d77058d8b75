use std::path::PathBuf;
use std::sync::OnceLock;

use lame_core::classify::*;

fn catalog_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/groups.txt")
}

fn loaded() -> &'static (Catalog, IntegrityReport) {
    static CELL: OnceLock<(Catalog, IntegrityReport)> = OnceLock::new();
    CELL.get_or_init(|| load_catalog(&catalog_path()).expect("catalog loads"))
}

fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
    v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

#[test]
fn catalog_integrity() {
    let (cat, rep) = loaded();
    assert_eq!(cat.records.len(), 130);
    assert_eq!(rep.summary(), "48:52 60:13 72:50 84:15 OK");
}

#[test]
fn missing_a5_is_a_count_failure() {
    let text = std::fs::read_to_string(catalog_path()).unwrap();
    let (cat, _) = loaded();
    let a5 = lame_core::permgrp::make_group(lame_core::permgrp::GroupKind::Alternating(5)).unwrap();
    let a5_line = cat
        .of_order(60)
        .find(|r| lame_core::permgrp::is_isomorphic(&r.group, &a5))
        .unwrap()
        .line;
    let pruned: String =
        text.lines().enumerate().filter(|(i, _)| i + 1 != a5_line).map(|(_, l)| format!("{l}\n")).collect();
    let rep = Catalog::parse(&pruned).unwrap().verify();
    assert!(rep.issues.iter().any(|i| i.to_string() == "60:12 != 13"));
    assert!(!rep.order_complete(60));
    assert!(rep.order_complete(48));
}

#[test]
fn classification_by_genus() {
    let (cat, integrity) = loaded();
    let amalgams = standard_amalgams().unwrap();
    let report = classify_all(cat, integrity, &amalgams, &[5, 6, 7, 8]);
    assert_eq!(report.cases(5), pairs(&[("(i)", "S4 x C2"), ("(iii)", "S4 x C2")]));
    assert_eq!(report.cases(6), pairs(&[("(i)", "A5"), ("(ii)", "A5"), ("(iv)", "A5")]));
    assert!(report.cases(7).is_empty());
    assert!(report.cases(8).is_empty());
    assert!(report.genera.iter().all(|g| !g.conditional));
    assert_eq!(report.discrepancies.len(), 1);
    for e in &report.entries {
        assert!(e.witness_count > 0);
    }
    // deterministic
    let again = classify_all(cat, integrity, &amalgams, &[5, 6, 7, 8]);
    assert_eq!(serde_json::to_string(&report.entries).ok(), serde_json::to_string(&again.entries).ok());
}

#[test]
fn every_witness_revalidates() {
    let (cat, _) = loaded();
    for (_, a) in standard_amalgams().unwrap() {
        for order in [48, 60] {
            for r in cat.of_order(order) {
                for w in find_quotients(&a, &r.group) {
                    revalidate(&w, &a).unwrap();
                }
            }
        }
    }
}

#[test]
fn appendix_a1() {
    let (cat, _) = loaded();
    let rep = verify_appendix_a1(cat, &standard_amalgams().unwrap());
    assert_eq!(rep.orders_searched, vec![(48, 52), (72, 50)]);
    assert!(rep.order48_a_only_s4xc2, "{:?}", rep.hits);
    assert!(rep.order48_b_empty);
    assert!(rep.order72_empty);
}

#[test]
fn appendix_a2() {
    let (cat, _) = loaded();
    let rep = verify_appendix_a2(cat);
    assert_eq!(rep.rows.len(), 13);
    assert!(rep.passed());
}

#[test]
fn lemmas_on_witness_groups() {
    let (cat, _) = loaded();
    let a = standard_amalgams().unwrap().into_iter().map(|(_, a)| a).find(|a| a.name == "D2 *_Z2 D3").unwrap();
    let mut seen = 0;
    for r in cat.of_order(48) {
        for w in exact_intersection_witnesses(&a, &r.group).iter().take(3) {
            let rep = verify_appendix_lemmas(&r.group, w, &a);
            assert!(rep.passed(), "{:?}", rep.checks);
            assert_eq!(rep.kernel_order, 2);
            seen += 1;
        }
    }
    assert!(seen > 0);
}
