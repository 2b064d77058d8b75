//! Exact arithmetic: rationals, quadratic number fields, sparse multivariate
//! polynomials, resultants and the polynomial fixture format.
//!
//! Nothing in here touches floating point. Every constant used by the curve
//! computations (third roots of unity, `sqrt(5)`, `sqrt(-3)`, `i`) lives in a
//! field of degree at most two over the rationals.

mod field;
mod format;
mod poly;
mod rational;
mod resultant;
mod univariate;

pub use field::{FieldElem, FieldRef, NumberField};
pub use format::{parse_poly, print_poly};
pub use poly::{Monomial, MultiPoly};
pub use rational::{int, rat, rational_sqrt, serialize_rational, Rational};
pub use resultant::{gcd_univariate, perfect_square_form, resultant, PerfectSquare};
pub use univariate::{rational_roots, UniPoly};

use thiserror::Error;

/// Errors raised by the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("operands live in different number fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable index {var} out of range for arity {arity}")]
    VariableOutOfRange { var: usize, arity: usize },
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous in the requested variables")]
    NotHomogeneous,
    #[error("exact division failed: divisor does not divide dividend")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not univariate in variable {0}")]
    NotUnivariate(usize),
    #[error("t^2 - ({b})t - ({c}) is reducible over Q")]
    ReducibleModulus { b: String, c: String },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
