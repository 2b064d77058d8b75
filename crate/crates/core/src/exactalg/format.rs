//! Plain-text polynomial fixtures.
//!
//! ```text
//! poly 3 Q[t^2=-1*t+-1]
//! 1 : 4 0 0
//! 2+-1/3*t : 1 2 1
//! ```
//!
//! The header names the arity and the coefficient field (`Q` or a quadratic
//! relation). Each following line is one term. Blank lines and lines starting
//! with `#` are ignored.

use std::str::FromStr;

use num_traits::Zero;

use super::field::{FieldElem, FieldRef, NumberField};
use super::poly::MultiPoly;
use super::rational::Rational;
use super::AlgError;

fn field_token(k: &NumberField) -> String {
    match k.relation() {
        None => "Q".into(),
        Some((b, c)) => format!("Q[t^2={b}*t+{c}]"),
    }
}

fn parse_field(tok: &str, line: usize) -> Result<FieldRef, AlgError> {
    let err = |msg: &str| AlgError::Parse { line, msg: msg.into() };
    if tok == "Q" {
        return Ok(NumberField::rationals());
    }
    let body = tok
        .strip_prefix("Q[t^2=")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| err("field must be `Q` or `Q[t^2=<b>*t+<c>]`"))?;
    let (b, c) = body.split_once("*t+").ok_or_else(|| err("malformed field relation"))?;
    let b = parse_rational(b, line)?;
    let c = parse_rational(c, line)?;
    let name = match (b.to_string().as_str(), c.to_string().as_str()) {
        ("-1", "-1") => "Q(w)".to_string(),
        ("0", "-1") => "Q(i)".to_string(),
        _ => format!("Q[t^2={b}*t+{c}]"),
    };
    NumberField::quadratic(b, c, &name)
}

fn parse_rational(s: &str, line: usize) -> Result<Rational, AlgError> {
    let s = s.trim();
    let bad = || AlgError::Parse { line, msg: format!("bad rational `{s}`") };
    if let Some((_, d)) = s.split_once('/') {
        if d.trim_start_matches('+').chars().all(|c| c == '0') {
            return Err(bad());
        }
    }
    Rational::from_str(s).map_err(|_| bad())
}

fn parse_coeff(s: &str, k: &FieldRef, line: usize) -> Result<FieldElem, AlgError> {
    // a leading sign belongs to `a`; the separator is the first later '+'
    let split = s.char_indices().skip(1).find(|&(_, c)| c == '+').map(|(i, _)| i);
    match split {
        None => Ok(FieldElem::from_rational(k, parse_rational(s, line)?)),
        Some(i) => {
            let a = parse_rational(&s[..i], line)?;
            let bt = s[i + 1..].strip_suffix("*t").ok_or_else(|| AlgError::Parse {
                line,
                msg: format!("expected `a+b*t`, got `{s}`"),
            })?;
            let b = parse_rational(bt, line)?;
            if k.is_rational() && !b.is_zero() {
                return Err(AlgError::Parse { line, msg: "generator used over Q".into() });
            }
            Ok(FieldElem::new(k, a, b))
        }
    }
}

/// Serialize in the fixture format; `parse_poly(&print_poly(p)) == p`.
pub fn print_poly(p: &MultiPoly) -> String {
    let mut out = format!("poly {} {}\n", p.arity(), field_token(p.field()));
    for (e, c) in p.terms() {
        out.push_str(&c.to_fixture_string());
        out.push_str(" :");
        for k in e {
            out.push(' ');
            out.push_str(&k.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn parse_poly(text: &str) -> Result<MultiPoly, AlgError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or(AlgError::Parse { line: 0, msg: "empty input".into() })?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("poly") {
        return Err(AlgError::Parse { line: hl, msg: "header must start with `poly`".into() });
    }
    let arity: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or(AlgError::Parse { line: hl, msg: "missing arity".into() })?;
    let ftok = parts.next().ok_or(AlgError::Parse { line: hl, msg: "missing field".into() })?;
    if parts.next().is_some() {
        return Err(AlgError::Parse { line: hl, msg: "trailing tokens in header".into() });
    }
    let k = parse_field(ftok, hl)?;
    let mut terms = Vec::new();
    for (ln, l) in lines {
        let (c, e) = l.split_once(':').ok_or(AlgError::Parse { line: ln, msg: "expected `<coeff> : <exponents>`".into() })?;
        let coeff = parse_coeff(c.trim(), &k, ln)?;
        let exps = e
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| AlgError::Parse { line: ln, msg: "bad exponent".into() })?;
        if exps.len() != arity {
            return Err(AlgError::Parse { line: ln, msg: format!("expected {arity} exponents, found {}", exps.len()) });
        }
        terms.push((exps, coeff));
    }
    MultiPoly::from_terms(&k, arity, terms)
}
