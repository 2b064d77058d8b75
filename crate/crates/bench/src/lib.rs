//! Shared inputs for the criterion benches.

use std::path::PathBuf;

use lame_core::classify::{load_catalog, Catalog, IntegrityReport};
use lame_core::curvegeo::CurveFamily;
use lame_core::exactalg::{FieldElem, MultiPoly, NumberField};

pub fn catalog_path() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/groups.txt"))
}

pub fn catalog() -> (Catalog, IntegrityReport) {
    load_catalog(&catalog_path()).expect("committed catalog loads")
}

/// The quartic fiber at the given rational parameter.
pub fn quartic_fiber(a: i64) -> MultiPoly {
    let q = NumberField::rationals();
    CurveFamily::quartic().fiber(&FieldElem::from_int(&q, a)).expect("fiber")
}
