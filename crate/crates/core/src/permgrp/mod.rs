//! Finite permutation groups small enough to list every element.
//!
//! All structural questions (normalizers, Sylow subgroups, kernels,
//! isomorphism) are answered by filtering the full element list, which is
//! exact and fast for the orders that occur here (at most a few hundred).

mod group;
mod hom;
mod iso;
mod perm;

pub use group::{is_prime, make_group, prime_factors, GroupKind, PermGroup, DEFAULT_ORDER_CAP, MAX_DEGREE};
pub use hom::{coset_action, find_isomorphism, monomorphisms, Hom};
pub use iso::{fingerprint, is_isomorphic, Fingerprint};
pub use perm::Perm;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("point {0} occurs in two cycles")]
    OverlappingCycles(usize),
    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("permutation of degree {found} where degree {expected} was expected")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid group parameter: {0}")]
    InvalidParameter(String),
    #[error("group closure exceeded {cap} elements")]
    CapExceeded { cap: usize },
    #[error("not a subgroup")]
    NotSubgroup,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid homomorphism data: {0}")]
    InvalidImages(String),
    #[error("anchor maps an element of order {from} to one of order {to}")]
    AnchorOrderMismatch { from: u64, to: u64 },
}
