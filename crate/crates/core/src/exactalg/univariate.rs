use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{check_fields, FieldElem, FieldRef, Quad};
use super::poly::MultiPoly;
use super::rational::{int, Rational};
use super::AlgError;

/// Dense univariate polynomial over a number field; `coeffs[k]` multiplies `t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldRef,
    coeffs: Vec<Quad>,
}

impl UniPoly {
    pub fn zero(field: &FieldRef) -> Self {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn from_coeffs(field: &FieldRef, coeffs: Vec<FieldElem>) -> Result<Self, AlgError> {
        for c in &coeffs {
            check_fields(field, c.field())?;
        }
        let mut p = UniPoly { field: field.clone(), coeffs: coeffs.into_iter().map(|c| c.v).collect() };
        p.trim();
        Ok(p)
    }

    /// Read a polynomial that only involves `var`.
    pub fn from_multi(p: &MultiPoly, var: usize) -> Result<Self, AlgError> {
        if var >= p.arity() {
            return Err(AlgError::VariableOutOfRange { var, arity: p.arity() });
        }
        let mut coeffs = vec![Quad::zero(); p.degree_in(var).unwrap_or(0) as usize + 1];
        for (e, c) in p.raw_terms() {
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return Err(AlgError::NotUnivariate(var));
            }
            coeffs[e[var] as usize] = c.clone();
        }
        let mut u = UniPoly { field: p.field().clone(), coeffs };
        u.trim();
        Ok(u)
    }

    pub fn to_multi(&self, arity: usize, var: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(&self.field, arity);
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut e = vec![0; arity];
            e[var] = k as u32;
            p.add_term(e, c.clone());
        }
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Quad::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        FieldElem::from_quad(self.field.clone(), self.coeffs.get(k).cloned().unwrap_or_default())
    }

    pub fn leading(&self) -> Option<FieldElem> {
        self.coeffs.last().map(|c| FieldElem::from_quad(self.field.clone(), c.clone()))
    }

    pub fn monic(&self) -> Self {
        let Some(lc) = self.coeffs.last() else { return self.clone() };
        let inv = self.field.inv(lc).expect("nonzero");
        UniPoly { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| self.field.mul(c, &inv)).collect() }
    }

    pub fn derivative(&self) -> Self {
        let mut p = UniPoly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.scale(&int(k as i64))).collect(),
        };
        p.trim();
        p
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = Quad::zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.mul(&acc, &x.v).add(c);
        }
        FieldElem::from_quad(self.field.clone(), acc)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.field);
        }
        let mut c = vec![Quad::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].add(&self.field.mul(a, b));
            }
        }
        let mut p = UniPoly { field: self.field.clone(), coeffs: c };
        p.trim();
        p
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), AlgError> {
        check_fields(&self.field, &d.field)?;
        let dd = d.degree().ok_or(AlgError::DivisionByZero)?;
        let inv = self.field.inv(d.coeffs.last().unwrap())?;
        let mut r = self.coeffs.clone();
        let n = r.len();
        if n <= dd {
            return Ok((Self::zero(&self.field), self.clone()));
        }
        let mut q = vec![Quad::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = self.field.mul(&r[k + dd], &inv);
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].sub(&self.field.mul(&c, dc));
                }
            }
            q[k] = c;
        }
        let mut q = UniPoly { field: self.field.clone(), coeffs: q };
        let mut r = UniPoly { field: self.field.clone(), coeffs: r };
        q.trim();
        r.trim();
        Ok((q, r))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, o: &Self) -> Result<Self, AlgError> {
        check_fields(&self.field, &o.field)?;
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Err(AlgError::ZeroPolynomial);
        }
        Ok(a.monic())
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::ZeroPolynomial);
        }
        let d = self.derivative();
        if d.is_zero() {
            return Ok(self.monic());
        }
        let g = self.gcd(&d)?;
        Ok(self.div_rem(&g)?.0.monic())
    }

    /// Roots of a polynomial of degree at most two that lie in its own field.
    pub fn small_degree_roots(&self) -> Option<Vec<FieldElem>> {
        let k = &self.field;
        match self.degree()? {
            0 => Some(Vec::new()),
            1 => Some(vec![-(&self.coeff(0) / &self.coeff(1))]),
            2 => {
                let (a, b, c) = (self.coeff(2), self.coeff(1), self.coeff(0));
                let disc = &(&b * &b) - &(&FieldElem::from_int(k, 4) * &(&a * &c));
                let s = disc.sqrt()?;
                let two_a = &FieldElem::from_int(k, 2) * &a;
                let r1 = &(&(-&b) + &s) / &two_a;
                let r2 = &(&(-&b) - &s) / &two_a;
                Some(if r1 == r2 { vec![r1] } else { vec![r1, r2] })
            }
            _ => None,
        }
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    // Trial division; gives up on cofactors we cannot certify.
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &p * &p <= n && p <= limit {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        if &limit * &limit < n {
            return None;
        }
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Rational roots of a polynomial over Q, via the rational root theorem.
///
/// Returns `None` if an integer coefficient could not be factored far enough
/// to enumerate candidates.
pub fn rational_roots(p: &UniPoly) -> Option<Vec<Rational>> {
    if !p.field().is_rational() || p.is_zero() {
        return None;
    }
    let coeffs: Vec<Rational> = (0..=p.degree()?).map(|k| p.coeff(k).a().clone()).collect();
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let low = ints.iter().position(|c| !c.is_zero())?;
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let ints = &ints[low..];
    if ints.len() == 1 {
        return Some(roots);
    }
    let num_divs = divisors(&ints[0])?;
    let den_divs = divisors(ints.last().unwrap())?;
    let mut seen = std::collections::BTreeSet::new();
    for q in &den_divs {
        for n in &num_divs {
            for s in [n.clone(), -n.clone()] {
                let r = Rational::new(s, q.clone());
                if seen.insert(r.clone()) {
                    let v = ints.iter().rev().fold(Rational::zero(), |acc, c| acc * &r + Rational::from_integer(c.clone()));
                    if v.is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, NumberField};

    fn q_poly(c: &[i64]) -> UniPoly {
        let q = NumberField::rationals();
        UniPoly::from_coeffs(&q, c.iter().map(|&v| FieldElem::from_int(&q, v)).collect()).unwrap()
    }

    #[test]
    fn euclid_gcd() {
        // (t-1)(t+2) and (t-1)(t-3)
        let a = q_poly(&[-2, 1, 1]);
        let b = q_poly(&[3, -4, 1]);
        assert_eq!(a.gcd(&b).unwrap(), q_poly(&[-1, 1]));
    }

    #[test]
    fn rational_root_search() {
        // (a-2)(a+1)(a+2) = a^3 + a^2 - 4a - 4
        let p = q_poly(&[-4, -4, 1, 1]);
        assert_eq!(rational_roots(&p).unwrap(), vec![int(-2), int(-1), int(2)]);
        // 6t^2 - t - 1 = (3t+1)(2t-1)
        let p = q_poly(&[-1, -1, 6]);
        assert_eq!(rational_roots(&p).unwrap(), vec![rat(-1, 3), rat(1, 2)]);
        assert_eq!(rational_roots(&q_poly(&[1, 0, 1])).unwrap(), Vec::<Rational>::new());
        assert_eq!(rational_roots(&q_poly(&[0, 0, 1])).unwrap(), vec![int(0)]);
    }

    #[test]
    fn squarefree_part() {
        let p = q_poly(&[1, -1]).mul(&q_poly(&[1, -1])).mul(&q_poly(&[2, 1]));
        assert_eq!(p.squarefree().unwrap(), q_poly(&[-1, 1]).mul(&q_poly(&[2, 1])).monic());
    }

    #[test]
    fn quadratic_roots_in_eisenstein_field() {
        let k = NumberField::eisenstein();
        let one = FieldElem::one(&k);
        let p = UniPoly::from_coeffs(&k, vec![one.clone(), one.clone(), one]).unwrap();
        let roots = p.small_degree_roots().unwrap();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!(p.eval(&r).is_zero());
        }
    }
}
