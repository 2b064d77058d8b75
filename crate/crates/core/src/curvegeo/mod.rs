//! Plane-curve computations for the invariant quartic and sextic families,
//! and quotients of the dual graphs of their degenerate fibers.
//!
//! Polynomials have arity four: `x, y, z` and the family parameter `a`.

mod bitangent;
mod graph;
mod identities;
mod monomial;
mod singular;

pub use bitangent::{bitangency, bitangent_lines, quadratic_form_roots, tangency_orbits, Bitangency, OrbitReport};
pub use graph::{
    alpha_infinity_configuration, alpha_minus_two_configuration, betti_genus, double_cover, graph_quotient,
    invariant_voltage_classes, parse_graph_with_action, DualGraph, GraphAction, QuotientEdge, QuotientGraph, QuotientVertex,
};
pub use identities::{first_orbit, pencil_two_torsion, special_fiber_factorizations, FactorizationReport, PencilReport};
pub use monomial::{monomial_maps, monomial_stabilizer, MonomialMap, Stabilizer};
pub use singular::{
    roots_in_field, singular_parameters, singular_points, verify_singular_at, ParamValue, SingularEvidence,
    SingularParameter, SingularParameters, SingularPoints,
};

use std::fmt;

use thiserror::Error;

use crate::exactalg::{AlgError, FieldElem, FieldRef, MultiPoly, NumberField};
use crate::permgrp::GroupError;

pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;
pub const A: usize = 3;
pub const ARITY: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeoError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("restriction to the line is not a scalar times a square")]
    NotBitangent,
    #[error("the line is a component of the curve")]
    LineIsComponent,
    #[error("invalid line: {0}")]
    InvalidLine(String),
    #[error("point is not permuted by the group: {0}")]
    NotPermuted(String),
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("invalid action: {0}")]
    Action(String),
    #[error("the action inverts edge {0}")]
    Inversion(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A one-parameter family of plane curves `f(x, y, z, a) = 0`.
#[derive(Clone, Debug)]
pub struct CurveFamily {
    pub name: String,
    pub poly: MultiPoly,
    pub degree: u32,
}

impl CurveFamily {
    /// Checks homogeneity in `(x, y, z)` and degree at most one in `a`.
    pub fn new(name: &str, poly: MultiPoly) -> Result<Self, GeoError> {
        if poly.arity() != ARITY {
            return Err(GeoError::InvalidFamily(format!("arity {} (expected 4)", poly.arity())));
        }
        let degree = poly
            .homogeneous_degree(&[X, Y, Z])
            .ok_or_else(|| GeoError::InvalidFamily("not homogeneous in x, y, z".into()))?;
        if poly.degree_in(A).unwrap_or(0) > 1 {
            return Err(GeoError::InvalidFamily("degree in the parameter exceeds one".into()));
        }
        Ok(CurveFamily { name: name.to_string(), poly, degree })
    }

    pub fn field(&self) -> &FieldRef {
        self.poly.field()
    }

    /// `x^4 + y^4 + z^4 + a (x^2 y^2 + y^2 z^2 + z^2 x^2)`.
    pub fn quartic() -> Self {
        let q = NumberField::rationals();
        let [x, y, z, a] = vars(&q);
        let p = power_sum(&[&x, &y, &z], 4) + &a * &(&(&x.pow(2) * &y.pow(2)) + &(&(&y.pow(2) * &z.pow(2)) + &(&z.pow(2) * &x.pow(2))));
        Self::new("quartic", p).expect("valid family")
    }

    /// `T + a S` with `T = sum x^6 + (sum x^2)(sum x^4) - 12 x^2 y^2 z^2` and
    /// `S = (y^2 - z^2)(z^2 - x^2)(x^2 - y^2)`.
    pub fn sextic() -> Self {
        let q = NumberField::rationals();
        let [x, y, z, a] = vars(&q);
        let s2 = power_sum(&[&x, &y, &z], 2);
        let s4 = power_sum(&[&x, &y, &z], 4);
        let xyz2 = (&(&x * &y) * &z).pow(2);
        let t = &(&power_sum(&[&x, &y, &z], 6) + &(&s2 * &s4)) - &xyz2.scale_rational(&crate::exactalg::int(12));
        let (x2, y2, z2) = (x.pow(2), y.pow(2), z.pow(2));
        let s = &(&(&y2 - &z2) * &(&z2 - &x2)) * &(&x2 - &y2);
        Self::new("sextic", &t + &(&a * &s)).expect("valid family")
    }

    /// `x^3 + y^3 + z^3` (no parameter).
    pub fn fermat_cubic() -> Self {
        let q = NumberField::rationals();
        let [x, y, z, _] = vars(&q);
        Self::new("Fermat cubic", power_sum(&[&x, &y, &z], 3)).expect("valid family")
    }

    /// The fiber over `a = value`, with coefficients in `value`'s field.
    pub fn fiber(&self, value: &FieldElem) -> Result<MultiPoly, GeoError> {
        Ok(self.poly.embed(value.field())?.specialize(A, value)?)
    }

    /// The fiber at infinity: the coefficient of `a`.
    pub fn infinity_form(&self) -> MultiPoly {
        let mut c = self.poly.coefficients_in(A).expect("var in range");
        c.truncate(2);
        c.pop().filter(|p| !p.is_zero()).unwrap_or_else(|| MultiPoly::zero(self.field(), ARITY))
    }

    /// The family in the parameter `b = 1/a`, cleared of denominators.
    pub fn reversed(&self) -> Result<Self, GeoError> {
        let c = self.poly.coefficients_in(A)?;
        let a = MultiPoly::var(self.field(), ARITY, A);
        let c0 = c.first().cloned().unwrap_or_else(|| MultiPoly::zero(self.field(), ARITY));
        let c1 = c.get(1).cloned().unwrap_or_else(|| MultiPoly::zero(self.field(), ARITY));
        Self::new(&format!("{} reversed", self.name), &(&a * &c0) + &c1)
    }
}

/// `x, y, z, a` over `k`.
pub fn vars(k: &FieldRef) -> [MultiPoly; 4] {
    [0, 1, 2, 3].map(|i| MultiPoly::var(k, ARITY, i))
}

fn power_sum(vs: &[&MultiPoly], n: u32) -> MultiPoly {
    let mut acc = MultiPoly::zero(vs[0].field(), vs[0].arity());
    for v in vs {
        acc = &acc + &v.pow(n);
    }
    acc
}

/// A point of the projective plane with coordinates in one field.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    coords: [FieldElem; 3],
}

impl ProjPoint {
    /// Scales so the first nonzero coordinate is one.
    pub fn new(coords: [FieldElem; 3]) -> Result<Self, GeoError> {
        let k = coords[0].field().clone();
        for c in &coords {
            if **c.field() != *k {
                return Err(GeoError::InvalidLine("coordinates in different fields".into()));
            }
        }
        let lead = coords.iter().find(|c| !c.is_zero()).cloned().ok_or_else(|| GeoError::InvalidLine("(0:0:0)".into()))?;
        let inv = lead.inv()?;
        Ok(ProjPoint { coords: coords.map(|c| &c * &inv) })
    }

    pub fn from_ints(k: &FieldRef, c: [i64; 3]) -> Self {
        Self::new(c.map(|v| FieldElem::from_int(k, v))).expect("nonzero")
    }

    pub fn coords(&self) -> &[FieldElem; 3] {
        &self.coords
    }

    pub fn field(&self) -> &FieldRef {
        self.coords[0].field()
    }

    /// Coordinates followed by the parameter value, for evaluating family
    /// polynomials.
    pub fn with_param(&self, a: &FieldElem) -> [FieldElem; 4] {
        [self.coords[0].clone(), self.coords[1].clone(), self.coords[2].clone(), a.clone()]
    }

    pub fn conj(&self) -> Self {
        ProjPoint::new(self.coords.clone().map(|c| c.conj())).expect("nonzero")
    }

    pub fn embed(&self, k: &FieldRef) -> Result<Self, GeoError> {
        let c: Vec<FieldElem> = self.coords.iter().map(|c| c.embed(k)).collect::<Result<_, _>>()?;
        ProjPoint::new([c[0].clone(), c[1].clone(), c[2].clone()])
    }

    /// `f(p) = 0` for a ternary form (parameter slot ignored when absent).
    pub fn on(&self, f: &MultiPoly) -> Result<bool, GeoError> {
        let zero = FieldElem::zero(self.field());
        let f = f.embed(self.field())?;
        Ok(f.eval(&self.with_param(&zero))?.is_zero())
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, o: &Self) -> bool {
        self.coords == o.coords
    }
}

impl Eq for ProjPoint {}

impl std::hash::Hash for ProjPoint {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.coords.hash(h)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// Pretty-print a family polynomial with variable names `x, y, z, a`.
pub fn show(p: &MultiPoly) -> String {
    p.display_with(&["x", "y", "z", "a"])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    #[test]
    fn families() {
        let q = CurveFamily::quartic();
        assert_eq!(q.degree, 4);
        assert_eq!(q.poly.num_terms(), 6);
        let s = CurveFamily::sextic();
        assert_eq!(s.degree, 6);
        // T vanishes at (1:1:1)
        let k = NumberField::rationals();
        let one = FieldElem::one(&k);
        let pt = [one.clone(), one.clone(), one.clone(), FieldElem::zero(&k)];
        assert!(s.poly.eval(&pt).unwrap().is_zero());
        assert_eq!(show(&q.infinity_form()), show(&(&q.poly - &q.fiber(&FieldElem::zero(&k)).unwrap()).specialize(A, &one).unwrap()));
        assert!(CurveFamily::new("bad", parse_poly("poly 4 Q\n1 : 1 0 0 2\n1 : 0 1 0 2\n").unwrap()).is_err());
        assert!(CurveFamily::new("bad", parse_poly("poly 4 Q\n1 : 2 0 0 0\n1 : 0 1 0 0\n").unwrap()).is_err());
        let r = q.reversed().unwrap();
        assert_eq!(r.fiber(&FieldElem::zero(&k)).unwrap(), q.infinity_form());
    }

    #[test]
    fn projective_points() {
        let w = NumberField::eisenstein();
        let om = FieldElem::generator(&w);
        let p = ProjPoint::new([FieldElem::one(&w), om.clone(), om.pow(2)]).unwrap();
        let q = ProjPoint::new([om.clone(), om.pow(2), FieldElem::one(&w)]).unwrap();
        assert_eq!(p, q);
        assert_ne!(p, p.conj());
        assert!(ProjPoint::new([FieldElem::zero(&w), FieldElem::zero(&w), FieldElem::zero(&w)]).is_err());
    }
}
