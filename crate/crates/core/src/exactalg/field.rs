use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{int, rational_sqrt, Rational};
use super::AlgError;

/// Shared handle to a number field. Elements and polynomials keep one of these.
pub type FieldRef = Arc<NumberField>;

/// Q, or a quadratic extension Q(t) with `t^2 = b*t + c`.
///
/// Two fields compare equal when their defining relations agree; the display
/// name is cosmetic.
#[derive(Clone, Debug)]
pub struct NumberField {
    relation: Option<(Rational, Rational)>,
    name: String,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.relation == other.relation
    }
}

impl Eq for NumberField {}

impl Hash for NumberField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.relation.hash(state);
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Coefficient pair `a + b*t` without a field handle; the arithmetic lives on
/// [`NumberField`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct Quad {
    pub a: Rational,
    pub b: Rational,
}

impl Quad {
    pub fn rational(a: Rational) -> Self {
        Quad { a, b: Rational::zero() }
    }

    pub fn zero() -> Self {
        Quad::default()
    }

    pub fn one() -> Self {
        Quad::rational(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn add(&self, o: &Quad) -> Quad {
        Quad { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &Quad) -> Quad {
        Quad { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn neg(&self) -> Quad {
        Quad { a: -&self.a, b: -&self.b }
    }

    pub fn scale(&self, r: &Rational) -> Quad {
        Quad { a: &self.a * r, b: &self.b * r }
    }
}

impl NumberField {
    pub fn rationals() -> FieldRef {
        Arc::new(NumberField { relation: None, name: "Q".into() })
    }

    /// Q(t) with `t^2 = b*t + c`; rejects reducible relations.
    pub fn quadratic(b: Rational, c: Rational, name: &str) -> Result<FieldRef, AlgError> {
        let disc = &b * &b + int(4) * &c;
        if rational_sqrt(&disc).is_some() {
            return Err(AlgError::ReducibleModulus { b: b.to_string(), c: c.to_string() });
        }
        Ok(Arc::new(NumberField { relation: Some((b, c)), name: name.into() }))
    }

    /// Q(w) with w a primitive third root of unity: `w^2 = -w - 1`.
    pub fn eisenstein() -> FieldRef {
        Self::quadratic(int(-1), int(-1), "Q(w)").expect("irreducible")
    }

    /// Q(i), `i^2 = -1`.
    pub fn gaussian() -> FieldRef {
        Self::quadratic(int(0), int(-1), "Q(i)").expect("irreducible")
    }

    /// Q(sqrt(d)) for a rational non-square `d`.
    pub fn sqrt_of(d: Rational) -> Result<FieldRef, AlgError> {
        let name = format!("Q(sqrt({d}))");
        Self::quadratic(int(0), d, &name)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_rational(&self) -> bool {
        self.relation.is_none()
    }

    /// `(b, c)` of the defining relation `t^2 = b*t + c`.
    pub fn relation(&self) -> Option<&(Rational, Rational)> {
        self.relation.as_ref()
    }

    pub(crate) fn mul(&self, x: &Quad, y: &Quad) -> Quad {
        match &self.relation {
            None => Quad::rational(&x.a * &y.a),
            Some((b, c)) => {
                if x.b.is_zero() && y.b.is_zero() {
                    return Quad::rational(&x.a * &y.a);
                }
                let bb = &x.b * &y.b;
                Quad {
                    a: &x.a * &y.a + &bb * c,
                    b: &x.a * &y.b + &x.b * &y.a + &bb * b,
                }
            }
        }
    }

    /// The Galois conjugate `a + b*t'` where `t' = b_rel - t`.
    pub(crate) fn conj(&self, x: &Quad) -> Quad {
        match &self.relation {
            None => x.clone(),
            Some((b, _)) => Quad { a: &x.a + &x.b * b, b: -&x.b },
        }
    }

    pub(crate) fn norm(&self, x: &Quad) -> Rational {
        match &self.relation {
            None => x.a.clone(),
            Some((b, c)) => &x.a * &x.a + &x.a * &x.b * b - &x.b * &x.b * c,
        }
    }

    pub(crate) fn inv(&self, x: &Quad) -> Result<Quad, AlgError> {
        if x.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        match &self.relation {
            None => Ok(Quad::rational(x.a.recip())),
            Some(_) => {
                let n = self.norm(x);
                Ok(self.conj(x).scale(&n.recip()))
            }
        }
    }

    /// Square root inside the field, if one exists.
    pub(crate) fn sqrt(&self, x: &Quad) -> Option<Quad> {
        let Some((bf, c)) = &self.relation else {
            return rational_sqrt(&x.a).map(Quad::rational);
        };
        // Work in the basis 1, d with d = 2t - b, d^2 = disc.
        let disc = bf * bf + int(4) * c;
        let q = &x.b / int(2);
        let p = &x.a + &x.b * bf / int(2);
        let to_quad = |u: Rational, v: Rational| Quad { a: &u - &v * bf, b: v * int(2) };
        let mut candidates = Vec::new();
        if q.is_zero() {
            if let Some(u) = rational_sqrt(&p) {
                candidates.push(to_quad(u, Rational::zero()));
            }
            if let Some(v) = rational_sqrt(&(&p / &disc)) {
                candidates.push(to_quad(Rational::zero(), v));
            }
        } else {
            let n = rational_sqrt(&(&p * &p - &disc * &q * &q))?;
            for s in [&p + &n, &p - &n] {
                if let Some(u) = rational_sqrt(&(s / int(2))) {
                    if !u.is_zero() {
                        let v = &q / (&u * int(2));
                        candidates.push(to_quad(u, v));
                    }
                }
            }
        }
        candidates.into_iter().find(|y| &self.mul(y, y) == x)
    }
}

/// An element `a + b*t` of a [`NumberField`].
///
/// Arithmetic operators panic if the two operands come from different fields;
/// use the `checked_*` methods where the fields are not known to agree.
#[derive(Clone, Debug)]
pub struct FieldElem {
    field: FieldRef,
    pub(crate) v: Quad,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.v == other.v
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state);
    }
}

fn same_field(x: &FieldRef, y: &FieldRef) -> Result<(), AlgError> {
    if Arc::ptr_eq(x, y) || **x == **y {
        Ok(())
    } else {
        Err(AlgError::FieldMismatch(x.name.clone(), y.name.clone()))
    }
}

pub(crate) fn check_fields(x: &FieldRef, y: &FieldRef) -> Result<(), AlgError> {
    same_field(x, y)
}

impl FieldElem {
    pub(crate) fn from_quad(field: FieldRef, v: Quad) -> Self {
        FieldElem { field, v }
    }

    pub fn new(field: &FieldRef, a: Rational, b: Rational) -> Self {
        let b = if field.is_rational() { Rational::zero() } else { b };
        FieldElem { field: field.clone(), v: Quad { a, b } }
    }

    pub fn from_rational(field: &FieldRef, a: Rational) -> Self {
        FieldElem { field: field.clone(), v: Quad::rational(a) }
    }

    pub fn from_int(field: &FieldRef, a: i64) -> Self {
        Self::from_rational(field, int(a))
    }

    pub fn zero(field: &FieldRef) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: &FieldRef) -> Self {
        Self::from_int(field, 1)
    }

    /// The generator `t` of a quadratic field.
    pub fn generator(field: &FieldRef) -> Self {
        assert!(!field.is_rational(), "Q has no quadratic generator");
        FieldElem { field: field.clone(), v: Quad { a: Rational::zero(), b: Rational::one() } }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn a(&self) -> &Rational {
        &self.v.a
    }

    pub fn b(&self) -> &Rational {
        &self.v.b
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.v.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.v.b.is_zero()
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, AlgError> {
        same_field(&self.field, &o.field)?;
        Ok(Self::from_quad(self.field.clone(), self.v.add(&o.v)))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, AlgError> {
        same_field(&self.field, &o.field)?;
        Ok(Self::from_quad(self.field.clone(), self.v.sub(&o.v)))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, AlgError> {
        same_field(&self.field, &o.field)?;
        Ok(Self::from_quad(self.field.clone(), self.field.mul(&self.v, &o.v)))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, AlgError> {
        same_field(&self.field, &o.field)?;
        let inv = self.field.inv(&o.v)?;
        Ok(Self::from_quad(self.field.clone(), self.field.mul(&self.v, &inv)))
    }

    pub fn inv(&self) -> Result<Self, AlgError> {
        Ok(Self::from_quad(self.field.clone(), self.field.inv(&self.v)?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Quad::one();
        for _ in 0..e {
            acc = self.field.mul(&acc, &self.v);
        }
        Self::from_quad(self.field.clone(), acc)
    }

    pub fn conj(&self) -> Self {
        Self::from_quad(self.field.clone(), self.field.conj(&self.v))
    }

    pub fn norm(&self) -> Rational {
        self.field.norm(&self.v)
    }

    pub fn sqrt(&self) -> Option<Self> {
        self.field.sqrt(&self.v).map(|v| Self::from_quad(self.field.clone(), v))
    }

    /// Re-express a rational element in another field.
    pub fn embed(&self, target: &FieldRef) -> Result<Self, AlgError> {
        if **target == *self.field {
            return Ok(Self::from_quad(target.clone(), self.v.clone()));
        }
        if self.is_rational() {
            return Ok(Self::from_rational(target, self.v.a.clone()));
        }
        Err(AlgError::FieldMismatch(self.field.name.clone(), target.name.clone()))
    }
}

impl FieldElem {
    /// `a+b*t`, the fixture spelling.
    pub fn to_fixture_string(&self) -> String {
        if self.v.b.is_zero() {
            self.v.a.to_string()
        } else {
            format!("{}+{}*t", self.v.a, self.v.b)
        }
    }
}

impl fmt::Display for FieldElem {
    /// `a + b*g` with `g` the generator named by the field (`w`, `i`,
    /// `sqrt(d)`, else `t`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (&self.v.a, &self.v.b);
        if b.is_zero() {
            return write!(f, "{a}");
        }
        let name = self.field.name();
        let g = name.strip_prefix("Q(").and_then(|s| s.strip_suffix(')')).unwrap_or("t");
        let one = Rational::one();
        let bpart = |b: &Rational| if *b == one { g.to_string() } else { format!("{b}*{g}") };
        if a.is_zero() {
            return if *b == -one.clone() { write!(f, "-{g}") } else { f.write_str(&bpart(b)) };
        }
        if b.is_negative() {
            write!(f, "{a} - {}", bpart(&-b.clone()))
        } else {
            write!(f, "{a} + {}", bpart(b))
        }
    }
}

macro_rules! field_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl std::ops::$tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("field elements from different fields")
            }
        }
        impl std::ops::$tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$checked(&rhs).expect("field elements from different fields")
            }
        }
    };
}

field_op!(Add, add, checked_add);
field_op!(Sub, sub, checked_sub);
field_op!(Mul, mul, checked_mul);
field_op!(Div, div, checked_div);

impl std::ops::Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::from_quad(self.field.clone(), self.v.neg())
    }
}

impl std::ops::Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}
