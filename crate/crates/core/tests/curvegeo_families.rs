use lame_core::curvegeo::{
    bitangency, bitangent_lines, first_orbit, monomial_maps, monomial_stabilizer, show, singular_parameters,
    singular_points, tangency_orbits, CurveFamily, MonomialMap, ParamValue, ProjPoint,
};
use lame_core::exactalg::{int, FieldElem, FieldRef, NumberField};
use proptest::prelude::*;

fn base_points(k: &FieldRef) -> Vec<ProjPoint> {
    [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]].iter().map(|c| ProjPoint::from_ints(k, *c)).collect()
}

#[test]
fn quartic_singular_parameters() {
    let f = CurveFamily::quartic();
    let q = NumberField::rationals();
    let r = singular_parameters(&f, &q, &[]).unwrap();
    assert!(!r.degenerate);
    assert!(r.charts_agree, "{:?}", r.chart_polys);
    let v = |n: i64| ParamValue::Finite(FieldElem::from_int(&q, n));
    assert!(r.contains(&v(2)) && r.contains(&v(-2)));
    assert!(r.contains(&ParamValue::Infinity));
    // computed, and flagged against the expected set {2, -2, inf}
    assert!(r.contains(&v(-1)));
    assert_eq!(r.parameters.len(), 4);
    let at_minus_one = r.parameters.iter().find(|p| p.value == v(-1)).unwrap();
    assert_eq!(at_minus_one.evidence.points.len(), 4);
    assert!(at_minus_one.evidence.points.contains(&"(1:1:1)".to_string()));
}

#[test]
fn gradient_vanishes_at_one_one_one() {
    let f = CurveFamily::quartic();
    let q = NumberField::rationals();
    let pt = [1, 1, 1, -1].map(|c| FieldElem::from_int(&q, c));
    assert!(f.poly.eval(&pt).unwrap().is_zero());
    for i in 0..3 {
        assert!(f.poly.partial_derivative(i).unwrap().eval(&pt).unwrap().is_zero());
    }
}

fn extra_singular_points(f: &CurveFamily, a: &FieldElem) -> Vec<ProjPoint> {
    let k = a.field().clone();
    let s = singular_points(&f.fiber(a).unwrap(), &k).unwrap();
    assert!(!s.non_isolated);
    let base = base_points(&k);
    for b in &base {
        assert!(s.points.contains(b), "{b} should be singular");
    }
    s.points.into_iter().filter(|p| !base.contains(p)).collect()
}

#[test]
fn sextic_candidates() {
    let f = CurveFamily::sextic();
    let q = NumberField::rationals();
    // the eliminants vanish identically: every fiber is singular at (1:+-1:+-1)
    let r = singular_parameters(&f, &q, &[]).unwrap();
    assert!(r.degenerate);
    let k5 = NumberField::sqrt_of(int(5)).unwrap();
    let s5 = FieldElem::generator(&k5);
    for sign in [1, -1] {
        let a = &FieldElem::from_int(&k5, 5 * sign) * &s5;
        let extra = extra_singular_points(&f, &a);
        assert!(!extra.is_empty(), "no extra singular point at {a}");
    }
    let k3 = NumberField::sqrt_of(int(-3)).unwrap();
    let s3 = FieldElem::generator(&k3);
    for a in [s3.clone(), -&s3] {
        assert!(!extra_singular_points(&f, &a).is_empty(), "no extra singular point at {a}");
    }
    // a generic control value has only the four base points
    for a in [0, 1, 3] {
        assert!(extra_singular_points(&f, &FieldElem::from_int(&q, a)).is_empty());
    }
}

#[test]
fn bitangents_share_the_scalar() {
    let f = CurveFamily::quartic();
    let q = NumberField::rationals();
    for l in bitangent_lines(&q) {
        let b = bitangency(&f, &l, None).unwrap();
        assert_eq!(show(&b.scalar), "a + 2");
        assert_eq!(b.points.len(), 2);
    }
}

#[test]
fn first_orbit_is_a_galois_half() {
    let f = CurveFamily::quartic();
    let w = NumberField::eisenstein();
    let mut pts = Vec::new();
    for l in bitangent_lines(&NumberField::rationals()) {
        pts.extend(bitangency(&f, &l, Some(&w)).unwrap().points);
    }
    let even: Vec<MonomialMap> = monomial_maps().into_iter().filter(MonomialMap::is_even).collect();
    let r = tangency_orbits(&pts, &even).unwrap();
    let p = first_orbit(&w);
    let o = r.orbit_of(&p[0]).unwrap();
    assert_eq!(o.len(), 4);
    assert!(p.iter().all(|x| o.contains(x)));
    let conj: Vec<ProjPoint> = p.iter().map(ProjPoint::conj).collect();
    let o2 = r.orbit_of(&conj[0]).unwrap();
    assert!(conj.iter().all(|x| o2.contains(x)));
    assert!(p.iter().all(|x| !o2.contains(x)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn monomial_symmetry_of_fibers(n in -50i64..50, d in 1i64..20) {
        let f = CurveFamily::quartic();
        let q = NumberField::rationals();
        let a = FieldElem::from_rational(&q, lame_core::exactalg::rat(n, d));
        let fiber = f.fiber(&a).unwrap();
        for m in monomial_stabilizer(&f).unwrap().maps {
            prop_assert!(m.fixes(&fiber).unwrap());
        }
    }

    #[test]
    fn tangency_points_lie_on_every_fiber(n in -50i64..50, d in 1i64..20) {
        let f = CurveFamily::quartic();
        let w = NumberField::eisenstein();
        let a = FieldElem::from_rational(&w, lame_core::exactalg::rat(n, d));
        let fiber = f.fiber(&a).unwrap();
        for p in first_orbit(&w) {
            prop_assert!(p.on(&fiber).unwrap());
            prop_assert!(p.conj().on(&fiber).unwrap());
        }
    }
}
