use std::collections::BTreeMap;
use std::fmt;

use super::field::{check_fields, FieldElem, FieldRef, Quad};
use super::rational::Rational;
use super::AlgError;

/// Exponent vector; its length is the polynomial's arity.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial over a [`NumberField`](super::NumberField).
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration is in
/// lexicographic order with variable 0 most significant and the last entry is
/// the lex-leading term. Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    field: FieldRef,
    arity: usize,
    terms: BTreeMap<Monomial, Quad>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.arity == other.arity && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(field: &FieldRef, arity: usize) -> Self {
        MultiPoly { field: field.clone(), arity, terms: BTreeMap::new() }
    }

    pub fn constant(c: &FieldElem, arity: usize) -> Self {
        let mut p = Self::zero(c.field(), arity);
        p.add_term(vec![0; arity], c.v.clone());
        p
    }

    pub fn from_int(field: &FieldRef, arity: usize, c: i64) -> Self {
        Self::constant(&FieldElem::from_int(field, c), arity)
    }

    pub fn one(field: &FieldRef, arity: usize) -> Self {
        Self::from_int(field, arity, 1)
    }

    /// The variable `var`.
    pub fn var(field: &FieldRef, arity: usize, var: usize) -> Self {
        assert!(var < arity, "variable {var} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[var] = 1;
        Self::monomial(&FieldElem::one(field), e)
    }

    pub fn monomial(c: &FieldElem, exps: Monomial) -> Self {
        let mut p = Self::zero(c.field(), exps.len());
        p.add_term(exps, c.v.clone());
        p
    }

    /// Build from `(exponents, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(
        field: &FieldRef,
        arity: usize,
        terms: impl IntoIterator<Item = (Monomial, FieldElem)>,
    ) -> Result<Self, AlgError> {
        let mut p = Self::zero(field, arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(AlgError::ArityMismatch { expected: arity, found: e.len() });
            }
            check_fields(field, c.field())?;
            p.add_term(e, c.v);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: Monomial, c: Quad) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElem)> + '_ {
        self.terms.iter().map(|(e, c)| (e, FieldElem::from_quad(self.field.clone(), c.clone())))
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Monomial, Quad> {
        &self.terms
    }

    pub fn coefficient(&self, exps: &[u32]) -> FieldElem {
        let v = self.terms.get(exps).cloned().unwrap_or_default();
        FieldElem::from_quad(self.field.clone(), v)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant value, if the polynomial has no variables.
    pub fn constant_value(&self) -> Option<FieldElem> {
        self.is_constant().then(|| self.coefficient(&vec![0; self.arity]))
    }

    /// Lex-leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, FieldElem)> {
        self.terms
            .iter()
            .next_back()
            .map(|(e, c)| (e, FieldElem::from_quad(self.field.clone(), c.clone())))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Degree in the given subset of variables, if every term has the same one.
    pub fn homogeneous_degree(&self, vars: &[usize]) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| vars.iter().map(|&v| e[v]).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.arity).filter(|&v| self.terms.keys().any(|e| e[v] > 0)).collect()
    }

    fn compatible(&self, o: &Self) -> Result<(), AlgError> {
        check_fields(&self.field, &o.field)?;
        if self.arity != o.arity {
            return Err(AlgError::ArityMismatch { expected: self.arity, found: o.arity });
        }
        Ok(())
    }

    fn check_var(&self, var: usize) -> Result<(), AlgError> {
        if var >= self.arity {
            return Err(AlgError::VariableOutOfRange { var, arity: self.arity });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, AlgError> {
        self.compatible(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, AlgError> {
        self.compatible(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.neg());
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            field: self.field.clone(),
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, AlgError> {
        self.compatible(o)?;
        let mut r = Self::zero(&self.field, self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, self.field.mul(c1, c2));
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &FieldElem) -> Result<Self, AlgError> {
        check_fields(&self.field, c.field())?;
        let mut r = Self::zero(&self.field, self.arity);
        if c.is_zero() {
            return Ok(r);
        }
        for (e, v) in &self.terms {
            r.terms.insert(e.clone(), self.field.mul(v, &c.v));
        }
        Ok(r)
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        let mut out = Self::zero(&self.field, self.arity);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.scale(r));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.field, self.arity);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Self, AlgError> {
        self.check_var(var)?;
        let mut r = Self::zero(&self.field, self.arity);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            r.add_term(e2, c.scale(&Rational::from_integer(e[var].into())));
        }
        Ok(r)
    }

    /// Replace `var` by `value`, fully expanded. Arity is unchanged.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> Result<Self, AlgError> {
        self.check_var(var)?;
        self.compatible(value)?;
        let maxdeg = self.degree_in(var).unwrap_or(0);
        let mut powers = vec![Self::one(&self.field, self.arity)];
        for k in 1..=maxdeg as usize {
            let next = powers[k - 1].mul(value)?;
            powers.push(next);
        }
        let mut r = Self::zero(&self.field, self.arity);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[var] = 0;
            let mono = MultiPoly { field: self.field.clone(), arity: self.arity, terms: BTreeMap::from([(rest, c.clone())]) };
            let t = mono.mul(&powers[e[var] as usize])?;
            for (e2, c2) in t.terms {
                r.add_term(e2, c2);
            }
        }
        Ok(r)
    }

    /// Substitute every variable at once; the result takes the arity of the
    /// substituted polynomials (all of which must agree).
    pub fn compose(&self, values: &[MultiPoly]) -> Result<Self, AlgError> {
        if values.len() != self.arity {
            return Err(AlgError::ArityMismatch { expected: self.arity, found: values.len() });
        }
        let Some(first) = values.first() else {
            return Ok(self.clone());
        };
        let new_arity = first.arity;
        for v in values {
            check_fields(&self.field, &v.field)?;
            if v.arity != new_arity {
                return Err(AlgError::ArityMismatch { expected: new_arity, found: v.arity });
            }
        }
        let mut cache: Vec<Vec<MultiPoly>> = values.iter().map(|v| vec![Self::one(&self.field, new_arity), v.clone()]).collect();
        let mut r = Self::zero(&self.field, new_arity);
        for (e, c) in &self.terms {
            let mut t = Self::constant(&FieldElem::from_quad(self.field.clone(), c.clone()), new_arity);
            for (i, &k) in e.iter().enumerate() {
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap().mul(&values[i])?;
                    cache[i].push(next);
                }
                if k > 0 {
                    t = t.mul(&cache[i][k as usize])?;
                }
            }
            for (e2, c2) in t.terms {
                r.add_term(e2, c2);
            }
        }
        Ok(r)
    }

    /// Set `x_var := value`. Arity is unchanged; `var` no longer occurs.
    pub fn specialize(&self, var: usize, value: &FieldElem) -> Result<Self, AlgError> {
        self.check_var(var)?;
        check_fields(&self.field, value.field())?;
        let maxdeg = self.degree_in(var).unwrap_or(0) as usize;
        let mut powers = vec![Quad::one()];
        for k in 1..=maxdeg {
            powers.push(self.field.mul(&powers[k - 1], &value.v));
        }
        let mut r = Self::zero(&self.field, self.arity);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[var] = 0;
            r.add_term(e2, self.field.mul(c, &powers[e[var] as usize]));
        }
        Ok(r)
    }

    pub fn eval(&self, point: &[FieldElem]) -> Result<FieldElem, AlgError> {
        if point.len() != self.arity {
            return Err(AlgError::ArityMismatch { expected: self.arity, found: point.len() });
        }
        for p in point {
            check_fields(&self.field, p.field())?;
        }
        let mut acc = Quad::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = self.field.mul(&t, &point[i].v);
                }
            }
            acc = acc.add(&t);
        }
        Ok(FieldElem::from_quad(self.field.clone(), acc))
    }

    /// Coefficients with respect to `var`: entry `k` multiplies `x_var^k`.
    pub fn coefficients_in(&self, var: usize) -> Result<Vec<MultiPoly>, AlgError> {
        self.check_var(var)?;
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.field, self.arity); deg + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[var] = 0;
            out[e[var] as usize].add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Reorder/rename variables: variable `i` becomes variable `map[i]` in a
    /// polynomial of arity `new_arity`.
    pub fn remap(&self, map: &[usize], new_arity: usize) -> Result<Self, AlgError> {
        if map.len() != self.arity {
            return Err(AlgError::ArityMismatch { expected: self.arity, found: map.len() });
        }
        let mut r = Self::zero(&self.field, new_arity);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; new_arity];
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let t = *map.get(i).filter(|&&t| t < new_arity).ok_or(AlgError::VariableOutOfRange { var: map[i], arity: new_arity })?;
                    e2[t] += k;
                }
            }
            r.add_term(e2, c.clone());
        }
        Ok(r)
    }

    /// Move a polynomial over Q into a quadratic field (or keep it in its own).
    pub fn embed(&self, target: &FieldRef) -> Result<Self, AlgError> {
        if **target == *self.field {
            return Ok(MultiPoly { field: target.clone(), ..self.clone() });
        }
        if !self.field.is_rational() {
            return Err(AlgError::FieldMismatch(self.field.name().into(), target.name().into()));
        }
        Ok(MultiPoly { field: target.clone(), arity: self.arity, terms: self.terms.clone() })
    }

    /// Galois conjugate of every coefficient.
    pub fn conj(&self) -> Self {
        MultiPoly {
            field: self.field.clone(),
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), self.field.conj(c))).collect(),
        }
    }

    /// Exact division in `K[x_0..x_n]`; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, AlgError> {
        self.compatible(d)?;
        let (lead_e, lead_c) = d.terms.iter().next_back().ok_or(AlgError::DivisionByZero)?;
        let lead_inv = self.field.inv(lead_c)?;
        if d.terms.len() == 1 {
            let mut q = Self::zero(&self.field, self.arity);
            for (e, c) in &self.terms {
                let e2 = sub_exps(e, lead_e).ok_or(AlgError::InexactDivision)?;
                q.terms.insert(e2, self.field.mul(c, &lead_inv));
            }
            return Ok(q);
        }
        let mut rem = self.clone();
        let mut q = Self::zero(&self.field, self.arity);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let qe = sub_exps(&e, lead_e).ok_or(AlgError::InexactDivision)?;
            let qc = self.field.mul(&c, &lead_inv);
            for (de, dc) in &d.terms {
                let te: Monomial = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(te, self.field.mul(dc, &qc).neg());
            }
            q.add_term(qe, qc);
        }
        Ok(q)
    }

    /// Scale so the lex-leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                let mut r = self.clone();
                for v in r.terms.values_mut() {
                    *v = self.field.mul(v, &inv);
                }
                r
            }
        }
    }

    /// Pretty form using the given variable names (`t` denotes the field generator).
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            // rational negative coefficients print as a subtraction
            let neg = c.b == Rational::default() && c.a < Rational::default();
            let c = if neg { c.neg() } else { c.clone() };
            let coeff = FieldElem::from_quad(self.field.clone(), c.clone());
            let mut mono = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                let name = names.get(i).copied().map(str::to_string).unwrap_or_else(|| format!("x{i}"));
                match k {
                    0 => {}
                    1 => mono.push(name),
                    _ => mono.push(format!("{name}^{k}")),
                }
            }
            let cs = if c.b == Rational::default() { coeff.to_string() } else { format!("({coeff})") };
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono.join("*")
            } else {
                format!("{cs}*{}", mono.join("*"))
            };
            out.push_str(match (out.is_empty(), neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            });
            out.push_str(&term);
        }
        out
    }
}

fn sub_exps(a: &[u32], b: &[u32]) -> Option<Monomial> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

macro_rules! poly_op {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$m(self, rhs).expect("incompatible polynomial operands")
            }
        }
        impl std::ops::$tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                MultiPoly::$m(&self, &rhs).expect("incompatible polynomial operands")
            }
        }
    };
}

poly_op!(Add, add);
poly_op!(Sub, sub);
poly_op!(Mul, mul);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

impl std::ops::Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::NumberField;

    fn xyz(k: &FieldRef, n: usize) -> Vec<MultiPoly> {
        (0..n).map(|i| MultiPoly::var(k, n, i)).collect()
    }

    #[test]
    fn derivative_power_rule() {
        let q = NumberField::rationals();
        let v = xyz(&q, 4);
        let (x, y, z, a) = (&v[0], &v[1], &v[2], &v[3]);
        let f = &(&(&x.pow(4) + &y.pow(4)) + &z.pow(4)) + &(a * &(&x.pow(2) * &y.pow(2)));
        let fx = f.partial_derivative(0).unwrap();
        let expect = &x.pow(3).scale_rational(&crate::exactalg::int(4)) + &(a * &(x * &y.pow(2))).scale_rational(&crate::exactalg::int(2));
        assert_eq!(fx, expect);
    }

    #[test]
    fn substitution_expands() {
        let q = NumberField::rationals();
        let v = xyz(&q, 3);
        let f = &(&v[0].pow(4) + &v[1].pow(4)) + &v[2].pow(4);
        let g = f.substitute(2, &(&v[0] + &v[1])).unwrap();
        let s = &(&v[0].pow(2) + &(&v[0] * &v[1])) + &v[1].pow(2);
        assert_eq!(g, s.pow(2).scale_rational(&crate::exactalg::int(2)));
        // hand expansion 2x^4 + 4x^3y + 6x^2y^2 + 4xy^3 + 2y^4
        assert_eq!(g.coefficient(&[3, 1, 0]), FieldElem::from_int(&q, 4));
        assert_eq!(g.coefficient(&[2, 2, 0]), FieldElem::from_int(&q, 6));
    }

    #[test]
    fn square_of_quadratic() {
        let q = NumberField::rationals();
        let v = xyz(&q, 2);
        let s = &(&v[0].pow(2) + &(&v[0] * &v[1])) + &v[1].pow(2);
        let sq = &s * &s;
        let want = [([4, 0], 1), ([3, 1], 2), ([2, 2], 3), ([1, 3], 2), ([0, 4], 1)];
        assert_eq!(sq.num_terms(), 5);
        for (e, c) in want {
            assert_eq!(sq.coefficient(&e), FieldElem::from_int(&q, c));
        }
    }

    #[test]
    fn exact_division_roundtrip_and_failure() {
        let q = NumberField::rationals();
        let v = xyz(&q, 2);
        let a = &(&v[0] + &v[1]) + &MultiPoly::one(&q, 2);
        let b = &v[0].pow(2) - &v[1];
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(b.div_exact(&a), Err(AlgError::InexactDivision));
    }

    #[test]
    fn mismatches_are_errors() {
        let q = NumberField::rationals();
        let w = NumberField::eisenstein();
        let a = MultiPoly::var(&q, 2, 0);
        let b = MultiPoly::var(&w, 2, 0);
        assert!(matches!(a.add(&b), Err(AlgError::FieldMismatch(..))));
        let c = MultiPoly::var(&q, 3, 0);
        assert!(matches!(a.mul(&c), Err(AlgError::ArityMismatch { .. })));
        assert!(a.partial_derivative(5).is_err());
    }

    #[test]
    fn compose_changes_arity() {
        let q = NumberField::rationals();
        let v3 = xyz(&q, 3);
        let v2 = xyz(&q, 2);
        let f = &v3[0] * &v3[2];
        let g = f.compose(&[v2[0].clone(), v2[1].clone(), &v2[0] + &v2[1]]).unwrap();
        assert_eq!(g.arity(), 2);
        assert_eq!(g, &v2[0] * &(&v2[0] + &v2[1]));
    }
}
