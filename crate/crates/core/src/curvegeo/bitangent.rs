use super::{CurveFamily, GeoError, MonomialMap, ProjPoint, A, ARITY, X, Y, Z};
use crate::exactalg::{perfect_square_form, rational_sqrt, FieldElem, FieldRef, MultiPoly, NumberField, Rational};
use num_traits::Zero;

/// A line meeting the curve in two double points, identically in `a`.
#[derive(Clone, Debug)]
pub struct Bitangency {
    pub line: MultiPoly,
    /// Polynomial in `a` only.
    pub scalar: MultiPoly,
    /// Binary form in the two coordinates kept on the line.
    pub root: MultiPoly,
    pub points: Vec<ProjPoint>,
}

/// `x + s1 y + s2 z` for the four sign choices, over `k`.
pub fn bitangent_lines(k: &FieldRef) -> Vec<MultiPoly> {
    let [x, y, z] = [X, Y, Z].map(|i| MultiPoly::var(k, ARITY, i));
    let mut out = Vec::new();
    for s1 in [1i64, -1] {
        for s2 in [1i64, -1] {
            let l = &(&x + &y.scale_rational(&Rational::from_integer(s1.into()))) + &z.scale_rational(&Rational::from_integer(s2.into()));
            out.push(l);
        }
    }
    out
}

fn linear_coeffs(line: &MultiPoly) -> Result<[FieldElem; 3], GeoError> {
    if line.homogeneous_degree(&[X, Y, Z]) != Some(1) || line.degree_in(A).unwrap_or(0) > 0 {
        return Err(GeoError::InvalidLine(format!("{line} is not a linear form in x, y, z")));
    }
    Ok([X, Y, Z].map(|i| {
        let mut e = vec![0; ARITY];
        e[i] = 1;
        line.coefficient(&e)
    }))
}

/// Roots `(u : v)` of a binary quadratic form `A u^2 + B uv + C v^2` with
/// constant coefficients, in `k`.
pub fn quadratic_form_roots(q: &MultiPoly, u: usize, v: usize, k: &FieldRef) -> Result<Vec<[FieldElem; 2]>, GeoError> {
    let q = q.embed(k)?;
    let mono = |i: u32, j: u32| {
        let mut e = vec![0; q.arity()];
        e[u] = i;
        e[v] = j;
        q.coefficient(&e)
    };
    let (ca, cb, cc) = (mono(2, 0), mono(1, 1), mono(0, 2));
    let (zero, one) = (FieldElem::zero(k), FieldElem::one(k));
    if ca.is_zero() {
        let mut out = vec![[one.clone(), zero.clone()]];
        if !cb.is_zero() {
            out.push([-cc, cb]);
        }
        return Ok(out);
    }
    let disc = &(&cb * &cb) - &(&FieldElem::from_int(k, 4) * &(&ca * &cc));
    let s = disc.sqrt().ok_or_else(|| GeoError::InvalidLine(format!("roots not in {}", k.name())))?;
    let two_a = &FieldElem::from_int(k, 2) * &ca;
    let mut out = vec![[&(&(-&cb) + &s) / &two_a, one.clone()]];
    if !s.is_zero() {
        out.push([&(&(-&cb) - &s) / &two_a, one]);
    }
    Ok(out)
}

/// A field containing the roots of a rational quadratic with discriminant `d`.
fn splitting_field(d: &Rational) -> Result<FieldRef, GeoError> {
    if rational_sqrt(d).is_some() {
        return Ok(NumberField::rationals());
    }
    if rational_sqrt(&(d / Rational::from_integer((-3).into()))).is_some() {
        return Ok(NumberField::eisenstein());
    }
    if rational_sqrt(&(-d.clone())).is_some() {
        return Ok(NumberField::gaussian());
    }
    Ok(NumberField::sqrt_of(d.clone())?)
}

/// Restrict `f` to the line, demand a scalar times a square identically in
/// `a`, and lift the roots of the square root back to the plane. Roots are
/// taken in `ext`, or in a quadratic field chosen from the discriminant.
pub fn bitangency(f: &CurveFamily, line: &MultiPoly, ext: Option<&FieldRef>) -> Result<Bitangency, GeoError> {
    let l = linear_coeffs(line)?;
    let j = (0..3).rev().find(|&i| !l[i].is_zero()).expect("nonzero linear form");
    let (u, v) = match j {
        0 => (Y, Z),
        1 => (X, Z),
        _ => (X, Y),
    };
    let k = f.field();
    let line_k = line.embed(k)?;
    let lj = l[j].embed(k)?;
    // x_j = x_j - line / l_j
    let xj = MultiPoly::var(k, ARITY, j);
    let expr = &xj - &line_k.scale(&lj.inv()?)?;
    let r = f.poly.substitute(j, &expr)?;
    if r.is_zero() {
        return Err(GeoError::LineIsComponent);
    }
    let ps = perfect_square_form(&r, u, v)?.ok_or(GeoError::NotBitangent)?;
    let field = match ext {
        Some(e) => e.clone(),
        None => {
            let m = |i: u32, j2: u32| {
                let mut e = vec![0; ARITY];
                e[u] = i;
                e[v] = j2;
                ps.root.coefficient(&e).a().clone()
            };
            let d = m(1, 1) * m(1, 1) - Rational::from_integer(4.into()) * m(2, 0) * m(0, 2);
            if d.is_zero() { k.clone() } else { splitting_field(&d)? }
        }
    };
    let mut points = Vec::new();
    let lk: Vec<FieldElem> = l.iter().map(|c| c.embed(&field)).collect::<Result<_, _>>()?;
    let roots = match ps.root.homogeneous_degree(&[u, v]) {
        Some(2) => quadratic_form_roots(&ps.root, u, v, &field)?,
        Some(1) => {
            let root = ps.root.embed(&field)?;
            let c = |i: usize| {
                let mut e = vec![0; ARITY];
                e[i] = 1;
                root.coefficient(&e)
            };
            vec![[-c(v), c(u)]]
        }
        _ => Vec::new(),
    };
    for [ru, rv] in roots {
        let mut c = [FieldElem::zero(&field), FieldElem::zero(&field), FieldElem::zero(&field)];
        let rj = &(-&(&(&lk[u] * &ru) + &(&lk[v] * &rv))) / &lk[j];
        c[u] = ru;
        c[v] = rv;
        c[j] = rj;
        points.push(ProjPoint::new(c)?);
    }
    Ok(Bitangency { line: line.clone(), scalar: ps.scalar, root: ps.root, points })
}

/// Orbits of a finite point set under monomial maps.
#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub orbits: Vec<Vec<ProjPoint>>,
}

impl OrbitReport {
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(Vec::len).collect();
        s.sort();
        s
    }

    pub fn orbit_of(&self, p: &ProjPoint) -> Option<&Vec<ProjPoint>> {
        self.orbits.iter().find(|o| o.contains(p))
    }
}

/// Partition `points` into orbits; every image must lie in the set.
pub fn tangency_orbits(points: &[ProjPoint], maps: &[MonomialMap]) -> Result<OrbitReport, GeoError> {
    let mut orbits: Vec<Vec<ProjPoint>> = Vec::new();
    for p in points {
        for m in maps {
            let q = m.apply_point(p);
            if !points.contains(&q) {
                return Err(GeoError::NotPermuted(format!("{m} sends {p} to {q}")));
            }
        }
        if orbits.iter().any(|o| o.contains(p)) {
            continue;
        }
        let mut orbit: Vec<ProjPoint> = Vec::new();
        for m in maps {
            let q = m.apply_point(p);
            if !orbit.contains(&q) {
                orbit.push(q);
            }
        }
        orbits.push(orbit);
    }
    Ok(OrbitReport { orbits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvegeo::{monomial_stabilizer, show};

    #[test]
    fn x_plus_y_minus_z() {
        let f = CurveFamily::quartic();
        let q = NumberField::rationals();
        let lines = bitangent_lines(&q);
        let b = bitangency(&f, &lines[1], None).unwrap();
        assert_eq!(show(&b.scalar), "a + 2");
        assert_eq!(show(&b.root), "x^2 + x*y + y^2");
        let w = NumberField::eisenstein();
        let om = FieldElem::generator(&w);
        let expected = ProjPoint::new([FieldElem::one(&w), om.clone(), -om.pow(2)]).unwrap();
        assert!(b.points.contains(&expected));
        assert!(b.points.contains(&expected.conj()));
    }

    #[test]
    fn non_bitangent_and_component() {
        let f = CurveFamily::quartic();
        let q = NumberField::rationals();
        let x = MultiPoly::var(&q, ARITY, X);
        let y = MultiPoly::var(&q, ARITY, Y);
        assert!(matches!(bitangency(&f, &(&x + &y), None), Err(GeoError::NotBitangent)));
        let fam = CurveFamily::new("lines", &(&x + &y) * &(&x - &y).pow(3)).unwrap();
        assert!(matches!(bitangency(&fam, &(&x + &y), None), Err(GeoError::LineIsComponent)));
        assert!(bitangency(&f, &(&x * &y), None).is_err());
    }

    #[test]
    fn orbit_split() {
        let f = CurveFamily::quartic();
        let w = NumberField::eisenstein();
        let mut pts = Vec::new();
        for l in bitangent_lines(&NumberField::rationals()) {
            pts.extend(bitangency(&f, &l, Some(&w)).unwrap().points);
        }
        assert_eq!(pts.len(), 8);
        let s4 = monomial_stabilizer(&f).unwrap();
        assert_eq!(tangency_orbits(&pts, &s4.maps).unwrap().sizes(), vec![8]);
        let a4: Vec<MonomialMap> = s4.maps.iter().copied().filter(MonomialMap::is_even).collect();
        assert_eq!(tangency_orbits(&pts, &a4).unwrap().sizes(), vec![4, 4]);
        assert!(tangency_orbits(&pts[..4], &s4.maps).is_err());
    }
}
