//! Catalog ingestion, amalgam quotient search and the order-by-order group
//! checks behind the genus 5 to 8 classification.

mod appendix;
mod catalog;
mod quotient;

pub use appendix::{
    exact_intersection_witnesses, verify_appendix_a1, verify_appendix_a2, verify_appendix_lemmas, AppendixA1Report,
    AppendixA2Report, Configuration, ConfigurationHit, LemmaCheck, LemmaReport, SylowFiveRow,
};
pub use catalog::{load_catalog, Catalog, CatalogRecord, IntegrityIssue, IntegrityReport, EXPECTED_COUNTS};
pub use quotient::{
    classify_all, find_quotients, iso_type, revalidate, standard_amalgams, ClassificationReport, GenusSummary,
    QuotientWitness, ReportEntry, WitnessSummary,
};

use thiserror::Error;

use crate::permgrp::GroupError;
use crate::treegrp::TreeError;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
    #[error("catalog integrity: {}", .0.join("; "))]
    Integrity(Vec<String>),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Unexpected(String),
}
