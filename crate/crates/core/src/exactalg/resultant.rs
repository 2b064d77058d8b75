use super::field::{check_fields, Quad};
use super::poly::MultiPoly;
use super::rational::int;
use super::univariate::UniPoly;
use super::AlgError;

/// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
fn bareiss_det(mut m: Vec<Vec<MultiPoly>>, one: MultiPoly) -> Result<MultiPoly, AlgError> {
    let n = m.len();
    if n == 0 {
        return Ok(one);
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(MultiPoly::zero(prev.field(), prev.arity()));
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k])?.sub(&m[i][k].mul(&m[k][j])?)?;
                m[i][j] = t.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Resultant of `f` and `g` with respect to `var`: the determinant of the
/// Sylvester matrix whose rows are the shifted coefficient vectors of `f`
/// (first `deg g` rows) followed by those of `g`, highest power first.
///
/// The result has the same arity; `var` no longer occurs in it.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<MultiPoly, AlgError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    check_fields(f.field(), g.field())?;
    if f.arity() != g.arity() {
        return Err(AlgError::ArityMismatch { expected: f.arity(), found: g.arity() });
    }
    let fc = f.coefficients_in(var)?;
    let gc = g.coefficients_in(var)?;
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    let one = MultiPoly::one(f.field(), f.arity());
    let zero = MultiPoly::zero(f.field(), f.arity());
    if m == 0 {
        return Ok(fc[0].pow(n as u32));
    }
    if n == 0 {
        return Ok(gc[0].pow(m as u32));
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (j, c) in fc.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in gc.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows, one)
}

fn univariate_var(f: &MultiPoly, g: &MultiPoly) -> Result<usize, AlgError> {
    let mut vars = f.support();
    vars.extend(g.support());
    vars.sort_unstable();
    vars.dedup();
    match vars.as_slice() {
        [] => Ok(0),
        [v] => Ok(*v),
        [_, w, ..] => Err(AlgError::NotUnivariate(*w)),
    }
}

/// Monic gcd of two univariate polynomials (both in the same single variable).
pub fn gcd_univariate(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, AlgError> {
    if f.arity() != g.arity() {
        return Err(AlgError::ArityMismatch { expected: f.arity(), found: g.arity() });
    }
    check_fields(f.field(), g.field())?;
    if f.is_zero() && g.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    let var = univariate_var(f, g)?;
    let uf = UniPoly::from_multi(f, var)?;
    let ug = UniPoly::from_multi(g, var)?;
    Ok(uf.gcd(&ug)?.to_multi(f.arity(), var))
}

/// Decomposition `f = scalar * root^2` found by [`perfect_square_form`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectSquare {
    /// Polynomial in the parameter variables only.
    pub scalar: MultiPoly,
    /// Binary form in the two form variables, coefficient of the highest power
    /// of the first form variable equal to one.
    pub root: MultiPoly,
}

/// Write a binary form in `(u, v)` as a scalar times a perfect square.
///
/// Variables other than `u` and `v` are parameters: the scalar may involve
/// them, the square root may not. Returns `Ok(None)` when no such
/// decomposition exists.
pub fn perfect_square_form(f: &MultiPoly, u: usize, v: usize) -> Result<Option<PerfectSquare>, AlgError> {
    if u >= f.arity() || v >= f.arity() {
        return Err(AlgError::VariableOutOfRange { var: u.max(v), arity: f.arity() });
    }
    if f.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    let d = f.homogeneous_degree(&[u, v]).ok_or(AlgError::NotHomogeneous)? as usize;
    if d % 2 == 1 {
        return Ok(None);
    }
    let field = f.field().clone();
    let arity = f.arity();
    // coefficient of u^(d-i) v^i as a polynomial in the parameters
    let mut coeffs = vec![MultiPoly::zero(&field, arity); d + 1];
    for (e, c) in f.raw_terms() {
        let i = e[v] as usize;
        let mut e2 = e.clone();
        e2[u] = 0;
        e2[v] = 0;
        coeffs[i].add_term(e2, c.clone());
    }
    let i0 = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero form");
    if i0 % 2 == 1 {
        return Ok(None);
    }
    let scalar = coeffs[i0].clone();
    let mut h: Vec<Quad> = Vec::with_capacity(d + 1 - i0);
    for c in &coeffs[i0..] {
        if c.is_zero() {
            h.push(Quad::zero());
            continue;
        }
        let Ok(k) = c.div_exact(&scalar) else { return Ok(None) };
        match k.constant_value() {
            Some(val) => h.push(val.v),
            None => return Ok(None),
        }
    }
    let big_d = h.len() - 1;
    let m = big_d / 2;
    let half = int(1) / int(2);
    let mut q: Vec<Quad> = vec![Quad::one()];
    for k in 1..=m {
        let mut s = h[k].clone();
        for j in 1..k {
            s = s.sub(&field.mul(&q[j], &q[k - j]));
        }
        q.push(s.scale(&half));
    }
    let mut sq = vec![Quad::zero(); big_d + 1];
    for (i, a) in q.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            sq[i + j] = sq[i + j].add(&field.mul(a, b));
        }
    }
    if sq != h {
        return Ok(None);
    }
    let mut root = MultiPoly::zero(&field, arity);
    for (j, c) in q.into_iter().enumerate() {
        let mut e = vec![0; arity];
        e[u] = (m - j) as u32;
        e[v] = (j + i0 / 2) as u32;
        root.add_term(e, c);
    }
    Ok(Some(PerfectSquare { scalar, root }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{FieldElem, NumberField};

    fn vars(k: &crate::exactalg::FieldRef, n: usize) -> Vec<MultiPoly> {
        (0..n).map(|i| MultiPoly::var(k, n, i)).collect()
    }

    #[test]
    fn linear_resultant() {
        let q = NumberField::rationals();
        let x = MultiPoly::var(&q, 1, 0);
        let one = MultiPoly::one(&q, 1);
        let r = resultant(&(&x - &one), &(&x + &one), 0).unwrap();
        assert_eq!(r, MultiPoly::from_int(&q, 1, 2));
    }

    #[test]
    fn shared_root_resultant_vanishes() {
        let q = NumberField::rationals();
        let x = MultiPoly::var(&q, 1, 0);
        let one = MultiPoly::one(&q, 1);
        let r = resultant(&(&x.pow(2) - &one), &(&x - &one), 0).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn quadratic_discriminant_sign() {
        // Sylvester expansion of rows [1, a, 1], [2, a, 0], [0, 2, a] is 4 - a^2.
        let q = NumberField::rationals();
        let v = vars(&q, 2);
        let (x, a) = (&v[0], &v[1]);
        let one = MultiPoly::one(&q, 2);
        let two = MultiPoly::from_int(&q, 2, 2);
        let f = &(&x.pow(2) + &(a * x)) + &one;
        let g = &(&two * x) + a;
        let r = resultant(&f, &g, 0).unwrap();
        assert_eq!(r, &MultiPoly::from_int(&q, 2, 4) - &a.pow(2));
    }

    #[test]
    fn zero_input_rejected() {
        let q = NumberField::rationals();
        let x = MultiPoly::var(&q, 1, 0);
        assert_eq!(resultant(&MultiPoly::zero(&q, 1), &x, 0), Err(AlgError::ZeroPolynomial));
    }

    #[test]
    fn gcd_examples() {
        let q = NumberField::rationals();
        let x = MultiPoly::var(&q, 1, 0);
        let one = MultiPoly::one(&q, 1);
        assert_eq!(gcd_univariate(&(&x.pow(2) - &one), &(&x - &one)).unwrap(), &x - &one);
        let two = MultiPoly::from_int(&q, 1, 2);
        assert_eq!(gcd_univariate(&(&x.pow(2) + &one), &(&x + &two)).unwrap(), one);

        let k = NumberField::eisenstein();
        let x = MultiPoly::var(&k, 1, 0);
        let one = MultiPoly::one(&k, 1);
        let w = MultiPoly::constant(&FieldElem::generator(&k), 1);
        let f = &(&x.pow(2) + &x) + &one;
        assert_eq!(gcd_univariate(&f, &(&x - &w)).unwrap(), &x - &w);
    }

    #[test]
    fn perfect_square_examples() {
        let q = NumberField::rationals();
        let v = vars(&q, 3);
        let (x, y, a) = (&v[0], &v[1], &v[2]);
        let s = &(&x.pow(2) + &(x * y)) + &y.pow(2);
        let two = MultiPoly::from_int(&q, 3, 2);
        let f = &two * &s.pow(2);
        let ps = perfect_square_form(&f, 0, 1).unwrap().unwrap();
        assert_eq!(ps.scalar, two);
        assert_eq!(ps.root, s);

        let g = &x.pow(4) + &y.pow(4);
        assert_eq!(perfect_square_form(&g, 0, 1).unwrap(), None);

        let c = &two + a;
        let h = &c * &s.pow(2);
        let ps = perfect_square_form(&h, 0, 1).unwrap().unwrap();
        assert_eq!(ps.scalar, c);
        assert_eq!(ps.root, s);

        let bad = &x.pow(2) + y;
        assert_eq!(perfect_square_form(&bad, 0, 1), Err(AlgError::NotHomogeneous));
    }

    #[test]
    fn square_with_vanishing_leading_part() {
        // y^2 (x + 2y)^2: leading u-coefficient is zero
        let q = NumberField::rationals();
        let v = vars(&q, 2);
        let t = &v[0] + &(&MultiPoly::from_int(&q, 2, 2) * &v[1]);
        let f = &v[1].pow(2) * &t.pow(2);
        let ps = perfect_square_form(&f, 0, 1).unwrap().unwrap();
        assert_eq!(&ps.scalar * &ps.root.pow(2), f);
        assert_eq!(ps.root, &v[1] * &t);
    }
}
