use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{CurveFamily, GeoError, ProjPoint, A, ARITY, X, Y, Z};
use crate::exactalg::{rational_roots, resultant, FieldElem, FieldRef, MultiPoly, NumberField, UniPoly};

/// Roots of `p` in `k`, and whether every root of `p` was accounted for.
///
/// Handles rational factors, leftover factors of degree two, and leftover
/// even quartics. Polynomials with irrational coefficients go through their
/// norm.
pub fn roots_in_field(p: &UniPoly, k: &FieldRef) -> Result<(Vec<FieldElem>, bool), GeoError> {
    if p.is_zero() {
        return Err(GeoError::Alg(crate::exactalg::AlgError::ZeroPolynomial));
    }
    let rational = (0..=p.degree().unwrap_or(0)).all(|i| p.coeff(i).is_rational());
    if !rational {
        // roots of p are among the roots of p * conj(p), which is over Q
        let conj = UniPoly::from_coeffs(p.field(), (0..=p.degree().unwrap()).map(|i| p.coeff(i).conj()).collect())?;
        let norm = p.mul(&conj);
        let q = NumberField::rationals();
        let norm_q = UniPoly::from_coeffs(&q, (0..=norm.degree().unwrap()).map(|i| FieldElem::from_rational(&q, norm.coeff(i).a().clone())).collect())?;
        let (cands, complete) = roots_in_field(&norm_q, k)?;
        let pk = embed_uni(p, k)?;
        let roots: Vec<FieldElem> = cands.into_iter().filter(|c| pk.eval(c).is_zero()).collect();
        return Ok((roots, complete));
    }
    let q = NumberField::rationals();
    let pq = UniPoly::from_coeffs(&q, (0..=p.degree().unwrap()).map(|i| FieldElem::from_rational(&q, p.coeff(i).a().clone())).collect())?;
    let mut rest = pq.squarefree()?;
    let mut roots = Vec::new();
    for r in rational_roots(&rest).unwrap_or_default() {
        let lin = UniPoly::from_coeffs(&q, vec![FieldElem::from_rational(&q, -r.clone()), FieldElem::one(&q)])?;
        rest = rest.div_rem(&lin)?.0;
        roots.push(FieldElem::from_rational(k, r));
    }
    let deg = rest.degree().unwrap_or(0);
    let rk = embed_uni(&rest, k)?;
    let complete = match deg {
        0 => true,
        1 | 2 => match rk.small_degree_roots() {
            Some(r) if r.len() == deg => {
                roots.extend(r);
                true
            }
            _ => false,
        },
        4 if rk.coeff(1).is_zero() && rk.coeff(3).is_zero() => {
            // even quartic: a quadratic in t^2
            let quad = UniPoly::from_coeffs(k, vec![rk.coeff(0), rk.coeff(2), rk.coeff(4)])?;
            let mut found = Vec::new();
            for u in quad.small_degree_roots().unwrap_or_default() {
                if let Some(s) = u.sqrt() {
                    found.push(s.clone());
                    if !s.is_zero() {
                        found.push(-s);
                    }
                }
            }
            let complete = found.len() == 4;
            roots.extend(found);
            complete
        }
        _ => false,
    };
    Ok((roots, complete))
}

fn embed_uni(p: &UniPoly, k: &FieldRef) -> Result<UniPoly, GeoError> {
    let coeffs = (0..=p.degree().unwrap_or(0)).map(|i| p.coeff(i).embed(k)).collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::from_coeffs(k, coeffs)?)
}

/// Singular points of a plane curve with coordinates in one field.
#[derive(Clone, Debug)]
pub struct SingularPoints {
    pub points: Vec<ProjPoint>,
    /// Singular along a curve (a multiple component).
    pub non_isolated: bool,
    /// Every isolated singular point is defined over the field.
    pub complete: bool,
}

fn is_singular_at(f: &MultiPoly, grads: &[MultiPoly; 3], p: &ProjPoint) -> Result<bool, GeoError> {
    let zero = FieldElem::zero(p.field());
    let pt = p.with_param(&zero);
    if !f.eval(&pt)?.is_zero() {
        return Ok(false);
    }
    for g in grads {
        if !g.eval(&pt)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn univariate_gcd(ps: &[MultiPoly], var: usize) -> Result<Option<UniPoly>, GeoError> {
    let mut acc: Option<UniPoly> = None;
    for p in ps {
        if p.is_zero() {
            continue;
        }
        let u = UniPoly::from_multi(p, var)?;
        acc = Some(match acc {
            None => u.monic(),
            Some(a) => a.gcd(&u)?,
        });
    }
    Ok(acc)
}

/// All singular points of the ternary form `f` (the parameter slot must be
/// absent) with coordinates in `k`.
///
/// Points with `z != 0`: resultants in `x` of `f_x` against `f_y` and `f`
/// cut out the `y`-coordinates; each is then solved for `x` and checked.
/// Points with `z = 0` come from a univariate gcd on that line.
pub fn singular_points(f: &MultiPoly, k: &FieldRef) -> Result<SingularPoints, GeoError> {
    if f.degree_in(A).unwrap_or(0) > 0 {
        return Err(GeoError::InvalidFamily("parameter still present".into()));
    }
    let f = f.embed(k)?;
    let grads = [X, Y, Z].map(|v| f.partial_derivative(v).expect("var in range"));
    let one = FieldElem::one(k);
    let zero = FieldElem::zero(k);
    let mut points: Vec<ProjPoint> = Vec::new();
    let mut non_isolated = false;
    let mut complete = true;
    let push = |p: ProjPoint, points: &mut Vec<ProjPoint>| {
        if !points.contains(&p) {
            points.push(p);
        }
    };

    // chart z = 1
    let g = f.specialize(Z, &one)?;
    let gx = grads[0].specialize(Z, &one)?;
    let gy = grads[1].specialize(Z, &one)?;
    let gz = grads[2].specialize(Z, &one)?;
    let elim = if gx.is_zero() || gy.is_zero() {
        None
    } else {
        let r1 = resultant(&gx, &gy, X)?;
        let r2 = resultant(&gx, &g, X)?;
        if r1.is_zero() || r2.is_zero() { None } else { univariate_gcd(&[r1, r2], Y)? }
    };
    match elim {
        None => non_isolated = true,
        Some(h) => {
            let (ys, ok) = roots_in_field(&h, k)?;
            complete &= ok;
            for y0 in ys {
                let polys: Vec<MultiPoly> =
                    [&g, &gx, &gy, &gz].iter().map(|p| p.specialize(Y, &y0)).collect::<Result<_, _>>()?;
                match univariate_gcd(&polys, X)? {
                    None => non_isolated = true,
                    Some(hx) if hx.degree() == Some(0) => {}
                    Some(hx) => {
                        let (xs, ok) = roots_in_field(&hx, k)?;
                        complete &= ok;
                        for x0 in xs {
                            let p = ProjPoint::new([x0, y0.clone(), one.clone()])?;
                            if is_singular_at(&f, &grads, &p)? {
                                push(p, &mut points);
                            }
                        }
                    }
                }
            }
        }
    }

    // line z = 0: points (x : 1 : 0) and (1 : 0 : 0)
    let on_line: Vec<MultiPoly> = [&f, &grads[0], &grads[1], &grads[2]]
        .iter()
        .map(|p| p.specialize(Z, &zero).and_then(|q| q.specialize(Y, &one)))
        .collect::<Result<_, _>>()?;
    match univariate_gcd(&on_line, X)? {
        None => non_isolated = true,
        Some(hx) if hx.degree() == Some(0) => {}
        Some(hx) => {
            let (xs, ok) = roots_in_field(&hx, k)?;
            complete &= ok;
            for x0 in xs {
                push(ProjPoint::new([x0, one.clone(), zero.clone()])?, &mut points);
            }
        }
    }
    let e1 = ProjPoint::new([one.clone(), zero.clone(), zero.clone()])?;
    if is_singular_at(&f, &grads, &e1)? {
        push(e1, &mut points);
    }
    points.sort_by_key(|p| p.to_string());
    Ok(SingularPoints { points, non_isolated, complete })
}

/// A value of the family parameter, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Finite(FieldElem),
    Infinity,
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Finite(v) => write!(f, "{v}"),
            ParamValue::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Exact witnesses that a fiber is singular.
#[derive(Clone, Debug, Serialize)]
pub struct SingularEvidence {
    pub points: Vec<String>,
    pub non_isolated: bool,
    pub complete: bool,
    pub field: String,
}

impl SingularEvidence {
    pub fn is_singular(&self) -> bool {
        self.non_isolated || !self.points.is_empty()
    }

    fn from_points(s: &SingularPoints, k: &FieldRef) -> Self {
        SingularEvidence {
            points: s.points.iter().map(|p| p.to_string()).collect(),
            non_isolated: s.non_isolated,
            complete: s.complete,
            field: k.name().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularParameter {
    pub value: ParamValue,
    pub evidence: SingularEvidence,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularParameters {
    /// Squarefree eliminant in `a` for each chart `z = 1`, `y = 1`, `x = 1`.
    pub chart_polys: Vec<String>,
    pub charts_agree: bool,
    /// The elimination collapsed; candidates must be checked one by one.
    pub degenerate: bool,
    /// Confirmed singular parameter values.
    pub parameters: Vec<SingularParameter>,
    /// Eliminant factors whose roots lie outside the evidence field.
    pub unresolved: bool,
}

impl SingularParameters {
    pub fn contains(&self, v: &ParamValue) -> bool {
        self.parameters.iter().any(|p| &p.value == v)
    }
}

/// The chart eliminant: `gcd(res_q(r_a, r_b), res_q(r_a, r_c))` with
/// `r_a = res_p(f_p, f_q)`, `r_b = res_p(f_p, f_c)`, `r_c = res_p(f_p, f)`,
/// on the chart `c = 1`. Returns `None` when the chain collapses to zero.
fn chart_eliminant(f: &MultiPoly, chart: usize) -> Result<Option<UniPoly>, GeoError> {
    let k = f.field();
    let one = FieldElem::one(k);
    let others: Vec<usize> = [X, Y, Z].into_iter().filter(|&v| v != chart).collect();
    let (p, q) = (others[0], others[1]);
    let g = f.specialize(chart, &one)?;
    let gp = f.partial_derivative(p)?.specialize(chart, &one)?;
    let gq = f.partial_derivative(q)?.specialize(chart, &one)?;
    let gc = f.partial_derivative(chart)?.specialize(chart, &one)?;
    if gp.is_zero() || gq.is_zero() || gc.is_zero() {
        return Ok(None);
    }
    let ra = resultant(&gp, &gq, p)?;
    let rb = resultant(&gp, &gc, p)?;
    let rc = resultant(&gp, &g, p)?;
    if ra.is_zero() || rb.is_zero() || rc.is_zero() {
        return Ok(None);
    }
    // cheap collapse test: a common factor in q that survives specialisation
    let samples = [101i64, 1009, 10007];
    let mut collapses = true;
    for s in samples {
        let sv = FieldElem::from_int(k, s);
        let (a1, b1) = (ra.specialize(A, &sv)?, rb.specialize(A, &sv)?);
        if a1.is_zero() || b1.is_zero() {
            continue;
        }
        if univariate_gcd(&[a1, b1], q)?.and_then(|h| h.degree()) == Some(0) {
            collapses = false;
            break;
        }
    }
    if collapses {
        return Ok(None);
    }
    let e1 = resultant(&ra, &rb, q)?;
    let e2 = resultant(&ra, &rc, q)?;
    if e1.is_zero() || e2.is_zero() {
        return Ok(None);
    }
    let h = univariate_gcd(&[e1, e2], A)?.expect("nonzero");
    Ok(Some(if h.degree() == Some(0) { h } else { h.squarefree()? }))
}

/// Singular fiber at a given parameter value (in the value's field).
pub fn verify_singular_at(f: &CurveFamily, value: &ParamValue, k: &FieldRef) -> Result<SingularEvidence, GeoError> {
    let fiber = match value {
        ParamValue::Finite(v) => f.fiber(&v.embed(k)?)?,
        ParamValue::Infinity => f.infinity_form(),
    };
    let s = singular_points(&fiber, k)?;
    Ok(SingularEvidence::from_points(&s, k))
}

/// Parameter values with a singular fiber.
///
/// Eliminates `x, y, z` per affine chart; the squarefree eliminants give the
/// candidates (including the reversed family for `a = inf`), and each
/// candidate is confirmed by exhibiting singular points over `k`. If the
/// elimination collapses, `candidates` are checked instead.
pub fn singular_parameters(
    f: &CurveFamily,
    k: &FieldRef,
    candidates: &[ParamValue],
) -> Result<SingularParameters, GeoError> {
    let elims: Vec<Option<UniPoly>> =
        [Z, Y, X].par_iter().map(|&c| chart_eliminant(&f.poly, c)).collect::<Result<_, _>>()?;
    let degenerate = elims.iter().any(Option::is_none);
    let mut values: Vec<ParamValue> = Vec::new();
    let mut unresolved = false;
    let mut chart_polys = Vec::new();
    let mut charts_agree = false;
    if degenerate {
        values.extend(candidates.iter().cloned());
    } else {
        let polys: Vec<UniPoly> = elims.into_iter().map(Option::unwrap).collect();
        charts_agree = polys.windows(2).all(|w| w[0] == w[1]);
        for p in &polys {
            chart_polys.push(p.to_multi(ARITY, A).display_with(&["x", "y", "z", "a"]));
            let (roots, complete) = roots_in_field(p, k)?;
            unresolved |= !complete;
            for r in roots {
                let v = ParamValue::Finite(r);
                if !values.contains(&v) {
                    values.push(v);
                }
            }
        }
        // a = inf is a root of the reversed family at b = 0
        let rev = f.reversed()?;
        if let Some(h) = chart_eliminant(&rev.poly, Z)? {
            if h.eval(&FieldElem::zero(h.field())).is_zero() {
                values.push(ParamValue::Infinity);
            }
        }
        for c in candidates {
            if !values.contains(c) {
                values.push(c.clone());
            }
        }
    }
    let parameters: Vec<SingularParameter> = values
        .par_iter()
        .map(|v| Ok(SingularParameter { value: v.clone(), evidence: verify_singular_at(f, v, k)? }))
        .collect::<Result<Vec<_>, GeoError>>()?
        .into_iter()
        .filter(|p| p.evidence.is_singular())
        .collect();
    Ok(SingularParameters { chart_polys, charts_agree, degenerate, parameters, unresolved })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldRef {
        NumberField::rationals()
    }

    #[test]
    fn roots() {
        let k = NumberField::gaussian();
        // (t - 1)(t^2 + 1)
        let p = UniPoly::from_coeffs(&q(), [-1, 1, -1, 1].map(|c| FieldElem::from_int(&q(), c)).to_vec()).unwrap();
        let (r, complete) = roots_in_field(&p, &k).unwrap();
        assert!(complete);
        assert_eq!(r.len(), 3);
        // t^4 - 3 t^2 + 1 splits over Q(sqrt 5)
        let k5 = NumberField::sqrt_of(crate::exactalg::int(5)).unwrap();
        let p = UniPoly::from_coeffs(&q(), [1, 0, -3, 0, 1].map(|c| FieldElem::from_int(&q(), c)).to_vec()).unwrap();
        let (r, complete) = roots_in_field(&p, &k5).unwrap();
        assert!(complete && r.len() == 4);
        let (r, complete) = roots_in_field(&p, &q()).unwrap();
        assert!(!complete && r.is_empty());
    }

    #[test]
    fn infinity_form_has_three_nodes() {
        let f = CurveFamily::quartic();
        let s = singular_points(&f.infinity_form(), &NumberField::gaussian()).unwrap();
        assert!(s.complete && !s.non_isolated);
        let k = NumberField::gaussian();
        let mut expected: Vec<String> =
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]].iter().map(|c| ProjPoint::from_ints(&k, *c).to_string()).collect();
        expected.sort();
        assert_eq!(s.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(), expected);
    }

    #[test]
    fn quartic_special_fibers() {
        let f = CurveFamily::quartic();
        let k = NumberField::gaussian();
        let at = |v: i64| verify_singular_at(&f, &ParamValue::Finite(FieldElem::from_int(&k, v)), &k).unwrap();
        let e = at(-1);
        assert_eq!(e.points.len(), 4);
        assert!(e.points.contains(&"(1:1:1)".to_string()));
        assert_eq!(at(-2).points.len(), 6);
        assert!(at(2).non_isolated);
        assert!(!at(0).is_singular());
        assert!(!at(3).is_singular());
    }
}
