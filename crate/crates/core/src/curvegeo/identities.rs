use serde::Serialize;

use super::{bitangency, bitangent_lines, show, singular_points, vars, CurveFamily, GeoError, ProjPoint, A, ARITY, X, Y, Z};
use crate::exactalg::{int, resultant, FieldElem, FieldRef, MultiPoly, NumberField, UniPoly};

/// Polynomial identities for the special fibers of the quartic family.
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    /// `F_2 = (x^2 + y^2 + z^2)^2`.
    pub double_conic_at_2: bool,
    /// `F_{-2} = -(x+y+z)(-x+y+z)(x-y+z)(x+y-z)`.
    pub four_lines_at_minus_2: bool,
    /// Singular points of the coefficient of `a`.
    pub infinity_singular_points: Vec<String>,
    pub infinity_three_nodes: bool,
    /// `4 F_a = (a+2)(x^2+y^2+z^2)^2 + (a-2) * (product of the four lines)`.
    pub pencil_basis: bool,
    /// `t(a) = (a-2)/(a+2)`; `t(2) = 0` and the denominator vanishes at `-2`.
    pub t_formula: String,
    pub t_at_2_is_zero: bool,
    pub t_at_minus_2_is_infinite: bool,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.double_conic_at_2
            && self.four_lines_at_minus_2
            && self.infinity_three_nodes
            && self.pencil_basis
            && self.t_at_2_is_zero
            && self.t_at_minus_2_is_infinite
    }
}

fn four_lines(k: &FieldRef) -> MultiPoly {
    let [x, y, z, _] = vars(k);
    let l1 = &(&x + &y) + &z;
    let l2 = &(&(-&x) + &y) + &z;
    let l3 = &(&x - &y) + &z;
    let l4 = &(&x + &y) - &z;
    &(&l1 * &l2) * &(&l3 * &l4)
}

fn conic(k: &FieldRef) -> MultiPoly {
    let [x, y, z, _] = vars(k);
    &(&x.pow(2) + &y.pow(2)) + &z.pow(2)
}

pub fn special_fiber_factorizations() -> Result<FactorizationReport, GeoError> {
    let f = CurveFamily::quartic();
    let q = f.field().clone();
    let c2 = conic(&q).pow(2);
    let prod = four_lines(&q);
    let double_conic_at_2 = f.fiber(&FieldElem::from_int(&q, 2))? == c2;
    let four_lines_at_minus_2 = f.fiber(&FieldElem::from_int(&q, -2))? == -&prod;
    let gi = NumberField::gaussian();
    let sing = singular_points(&f.infinity_form(), &gi)?;
    let expected: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]].iter().map(|c| ProjPoint::from_ints(&gi, *c)).collect();
    let infinity_three_nodes =
        sing.complete && !sing.non_isolated && sing.points.len() == 3 && expected.iter().all(|p| sing.points.contains(p));
    let a = MultiPoly::var(&q, ARITY, A);
    let two = MultiPoly::from_int(&q, ARITY, 2);
    let lhs = f.poly.scale_rational(&int(4));
    let rhs = &(&(&a + &two) * &c2) + &(&(&a - &two) * &prod);
    let num = UniPoly::from_multi(&(&a - &two), A)?;
    let den = UniPoly::from_multi(&(&a + &two), A)?;
    Ok(FactorizationReport {
        double_conic_at_2,
        four_lines_at_minus_2,
        infinity_singular_points: sing.points.iter().map(|p| p.to_string()).collect(),
        infinity_three_nodes,
        pencil_basis: lhs == rhs,
        t_formula: format!("({})/({})", show(&(&a - &two)), show(&(&a + &two))),
        t_at_2_is_zero: num.eval(&FieldElem::from_int(&q, 2)).is_zero() && !den.eval(&FieldElem::from_int(&q, 2)).is_zero(),
        t_at_minus_2_is_infinite: den.eval(&FieldElem::from_int(&q, -2)).is_zero()
            && !num.eval(&FieldElem::from_int(&q, -2)).is_zero(),
    })
}

/// The conic pencils through the tangency points.
#[derive(Clone, Debug, Serialize)]
pub struct PencilReport {
    pub tangency_points: Vec<String>,
    pub lines: Vec<String>,
    /// Every member passes through the four points.
    pub through_points: bool,
    /// Parameter values where the member is tangent to each bitangent line.
    pub tangency_parameters: Vec<Vec<String>>,
    /// Tangency happens at `l = w^2` only, for all four lines.
    pub tangent_only_at_w2: bool,
    /// Common points of `P_{w^2}` and `P'_w`.
    pub base_points: Vec<String>,
    pub base_points_expected: bool,
    /// `P_{w^2}` touches each bitangent exactly at the `p_i` on it.
    pub first_member_touches_p: bool,
    /// `P'_w` touches each bitangent exactly at the conjugate points.
    pub second_member_touches_conjugates: bool,
    /// `P_w` and `P'_{w^2}`, the members taken with the parameters swapped.
    pub swapped_members: [String; 2],
    /// The swapped members are proportional, so they span no pencil.
    pub swapped_members_proportional: bool,
}

impl PencilReport {
    pub fn passed(&self) -> bool {
        self.through_points
            && self.tangent_only_at_w2
            && self.base_points_expected
            && self.first_member_touches_p
            && self.second_member_touches_conjugates
    }
}

fn line_through(p: &ProjPoint, q: &ProjPoint) -> MultiPoly {
    let (a, b) = (p.coords(), q.coords());
    let c = [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ];
    let k = p.field();
    let mut l = MultiPoly::zero(k, ARITY);
    for (i, ci) in c.iter().enumerate() {
        l = &l + &MultiPoly::var(k, ARITY, i).scale(ci).expect("same field");
    }
    l
}

/// `(1 : w : w^2)` and its images under the sign changes of `y` and `z`.
pub fn first_orbit(w: &FieldRef) -> Vec<ProjPoint> {
    let om = FieldElem::generator(w);
    let one = FieldElem::one(w);
    let o2 = om.pow(2);
    [(1, 1), (1, -1), (-1, -1), (-1, 1)]
        .iter()
        .map(|&(s1, s2)| {
            let y = if s1 > 0 { om.clone() } else { -&om };
            let z = if s2 > 0 { o2.clone() } else { -&o2 };
            ProjPoint::new([one.clone(), y, z]).expect("nonzero")
        })
        .collect()
}

/// Restriction of `p` (with the pencil parameter in slot `a`) to the line
/// `z = -(l_x x + l_y y)/l_z`, as the discriminant of the binary quadratic.
fn tangency_discriminant(p: &MultiPoly, line: &MultiPoly) -> Result<MultiPoly, GeoError> {
    let k = p.field();
    let line = line.embed(k)?;
    let coef = |i: usize| {
        let mut e = vec![0; ARITY];
        e[i] = 1;
        line.coefficient(&e)
    };
    let lz = coef(Z);
    let expr = &MultiPoly::var(k, ARITY, Z) - &line.scale(&lz.inv()?)?;
    let r = p.substitute(Z, &expr)?;
    let c = |i: u32, j: u32| -> Result<MultiPoly, GeoError> {
        let mut out = MultiPoly::zero(k, ARITY);
        for (e, v) in r.terms() {
            if e[X] == i && e[Y] == j {
                let mut e2 = e.clone();
                e2[X] = 0;
                e2[Y] = 0;
                out = &out + &MultiPoly::monomial(&v, e2);
            }
        }
        Ok(out)
    };
    let (ca, cb, cc) = (c(2, 0)?, c(1, 1)?, c(0, 2)?);
    Ok(&(&cb * &cb) - (&(&ca * &cc).scale_rational(&int(4))))
}

pub fn pencil_two_torsion() -> Result<PencilReport, GeoError> {
    let w = NumberField::eisenstein();
    let om = FieldElem::generator(&w);
    let o2 = om.pow(2);
    let p = first_orbit(&w);
    let pc: Vec<ProjPoint> = p.iter().map(ProjPoint::conj).collect();
    let ls = [line_through(&p[0], &p[1]), line_through(&p[2], &p[3]), line_through(&p[0], &p[2]), line_through(&p[1], &p[3])];
    let lam = MultiPoly::var(&w, ARITY, A);
    let pencil = &(&ls[0] * &ls[1]) + &(&lam * &(&ls[2] * &ls[3]));
    let pencil_conj = pencil.conj();

    let mut through_points = true;
    for pt in &p {
        let mut r = pencil.clone();
        for (i, c) in pt.coords().iter().enumerate() {
            r = r.specialize(i, c)?;
        }
        through_points &= r.is_zero();
    }

    let bitangents = bitangent_lines(&w);
    let mut tangency_parameters = Vec::new();
    let mut tangent_only_at_w2 = true;
    for l in &bitangents {
        let d = tangency_discriminant(&pencil, l)?;
        if d.is_zero() {
            tangent_only_at_w2 = false;
            tangency_parameters.push(vec!["all".to_string()]);
            continue;
        }
        let u = UniPoly::from_multi(&d, A)?;
        let (roots, complete) = super::roots_in_field(&u, &w)?;
        tangent_only_at_w2 &= complete && roots == vec![o2.clone()];
        tangency_parameters.push(roots.iter().map(|r| r.to_string()).collect());
    }

    // the two tangent members and their common points
    let c0 = pencil.specialize(A, &o2)?;
    let c1 = pencil_conj.specialize(A, &om)?;
    let base_expected: Vec<ProjPoint> =
        [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]].iter().map(|c| ProjPoint::from_ints(&w, *c)).collect();
    let mut base_points = Vec::new();
    for b in &base_expected {
        if b.on(&c0)? && b.on(&c1)? {
            base_points.push(b.clone());
        }
    }
    // two conics without a common component meet in four points with
    // multiplicity, so four distinct common points are all of them
    let no_common_component = !resultant(&c0, &c1, Z)?.is_zero();
    let base_points_expected = no_common_component && base_points.len() == 4;

    let touches = |conic: &MultiPoly, pts: &[ProjPoint]| -> Result<bool, GeoError> {
        let fam = CurveFamily::new("conic", conic.clone())?;
        let mut ok = true;
        for l in &bitangents {
            let b = match bitangency(&fam, l, Some(&w)) {
                Ok(b) => b,
                Err(GeoError::NotBitangent) => return Ok(false),
                Err(e) => return Err(e),
            };
            ok &= b.points.len() == 1 && pts.contains(&b.points[0]) && b.points[0].on(l)?;
        }
        Ok(ok)
    };

    let s0 = pencil.specialize(A, &om)?;
    let s1 = pencil_conj.specialize(A, &o2)?;
    let swapped_members_proportional = match (s0.leading_term(), s1.leading_term()) {
        (Some((e0, c0l)), Some((e1, c1l))) if e0 == e1 => s1 == s0.scale(&c1l.checked_div(&c0l)?)?,
        _ => false,
    };
    let names = ["x", "y", "z", "l"];

    Ok(PencilReport {
        swapped_members: [s0.display_with(&names), s1.display_with(&names)],
        swapped_members_proportional,
        tangency_points: p.iter().map(|q| q.to_string()).collect(),
        lines: ls.iter().map(|l| l.display_with(&names)).collect(),
        through_points,
        tangency_parameters,
        tangent_only_at_w2,
        base_points: base_points.iter().map(|q| q.to_string()).collect(),
        base_points_expected,
        first_member_touches_p: touches(&c0, &p)?,
        second_member_touches_conjugates: touches(&c1, &pc)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations() {
        let r = special_fiber_factorizations().unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.t_formula, "(a - 2)/(a + 2)");
    }

    #[test]
    fn pencil() {
        let r = pencil_two_torsion().unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.tangency_parameters.len(), 4);
        assert!(r.swapped_members_proportional, "{:?}", r.swapped_members);
    }

    #[test]
    fn orbit_points_on_quartic() {
        let f = CurveFamily::quartic();
        let w = NumberField::eisenstein();
        let fw = f.poly.embed(&w).unwrap();
        for p in first_orbit(&w).iter().chain(first_orbit(&w).iter().map(ProjPoint::conj).collect::<Vec<_>>().iter()) {
            let mut r = fw.clone();
            for (i, c) in p.coords().iter().enumerate() {
                r = r.specialize(i, c).unwrap();
            }
            assert!(r.is_zero(), "{p}");
        }
    }
}
