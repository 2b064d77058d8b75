//! Riemann-Hurwitz bookkeeping for a Galois cover of the projective line with
//! four branch points, and the three-point comparison table.
//!
//! A branch point has inertia `Z_p^t x| Z_n`; it contributes
//! `(1/n)(1 - 2/p^t)` to the sum, with `p^0 = 1`.

use std::collections::HashMap;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{int, rat, serialize_rational, Rational};
use crate::permgrp::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RamifyError {
    #[error("{0} is neither 0 nor a prime")]
    BadCharacteristic(u64),
    #[error("invalid ramification point: {0}")]
    InvalidPoint(String),
    #[error("type {0:?} is not hyperbolic")]
    NotHyperbolic(Vec<u64>),
    #[error("genus must be at least 2")]
    GenusTooSmall,
}

/// One branch point: tame part `n`, wild exponent `t`, characteristic `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RamPoint {
    pub n: u64,
    pub t: u32,
    pub p: u64,
}

impl RamPoint {
    pub fn new(n: u64, t: u32, p: u64) -> Result<Self, RamifyError> {
        if p != 0 && !is_prime(p) {
            return Err(RamifyError::BadCharacteristic(p));
        }
        if n == 0 {
            return Err(RamifyError::InvalidPoint("n = 0".into()));
        }
        if t == 0 {
            if n == 1 {
                return Err(RamifyError::InvalidPoint("n = 1, t = 0 is unramified".into()));
            }
            if p > 0 && n.is_multiple_of(p) {
                return Err(RamifyError::InvalidPoint(format!("tame order {n} divisible by p = {p}")));
            }
        } else {
            if p == 0 {
                return Err(RamifyError::InvalidPoint("wild ramification needs p > 0".into()));
            }
            let q = p.checked_pow(t).ok_or_else(|| RamifyError::InvalidPoint("p^t overflows".into()))?;
            if (q - 1) % n != 0 {
                return Err(RamifyError::InvalidPoint(format!("{n} does not divide {p}^{t} - 1")));
            }
        }
        Ok(RamPoint { n, t, p })
    }

    pub fn tame(n: u64, p: u64) -> Result<Self, RamifyError> {
        Self::new(n, 0, p)
    }

    pub fn is_tame(&self) -> bool {
        self.t == 0
    }
}

/// `(1/n)(1 - 2/p^t)`.
pub fn rh_term(pt: &RamPoint) -> Rational {
    let q = if pt.t == 0 { 1 } else { pt.p.pow(pt.t) as i64 };
    rat(1, pt.n as i64) * (int(1) - rat(2, q))
}

/// A multiset of branch points in one characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamType {
    pub p: u64,
    pub points: Vec<RamPoint>,
}

impl RamType {
    pub fn tame_orders(&self) -> Option<Vec<u64>> {
        self.points.iter().all(RamPoint::is_tame).then(|| self.points.iter().map(|q| q.n).collect())
    }

    pub fn sum(&self) -> Rational {
        self.points.iter().map(rh_term).fold(int(0), |a, b| a + b)
    }

    /// Side conditions on the residue field.
    pub fn notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        if self.p == 0 && self.points.iter().any(|q| q.n == 2 || q.n == 3) {
            notes.push("residue characteristic must be prime to 6".to_string());
        }
        notes
    }
}

/// The right-hand side for four branch points and a group of order `12(g-1)`.
pub fn rh_target() -> Rational {
    rat(-11, 6)
}

const POINTS: usize = 4;

/// All four-point types in characteristic `p` (0 allowed) summing to `-11/6`.
///
/// Bound: a tame term is `-1/n >= -1/2` (n >= 2) and a wild term is `>= 0`,
/// so any single term is at most `-11/6 + 3 * (1/2) = -1/3`. In particular
/// it is negative, hence tame, and `-1/n <= -1/3` gives `n <= 3`.
pub fn solve_rh(p: u64) -> Result<Vec<RamType>, RamifyError> {
    if p != 0 && !is_prime(p) {
        return Err(RamifyError::BadCharacteristic(p));
    }
    let min_term = rat(-1, 2);
    let max_term = rh_target() - min_term * int(POINTS as i64 - 1);
    debug_assert!(max_term.is_negative());
    // -1/n <= max_term  <=>  n <= 1/|max_term|
    let n_max = (int(1) / max_term.abs()).floor().to_integer();
    let n_max: u64 = n_max.try_into().expect("small bound");
    let candidates: Vec<RamPoint> = (2..=n_max).filter_map(|n| RamPoint::tame(n, p).ok()).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; POINTS];
    multisets(candidates.len(), POINTS, 0, &mut idx, 0, &mut |ix| {
        let ty = RamType { p, points: ix.iter().map(|&i| candidates[i]).collect() };
        if ty.sum() == rh_target() {
            out.push(ty);
        }
    });
    Ok(out)
}

fn multisets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, depth: usize, f: &mut impl FnMut(&[usize])) {
    if depth == k {
        f(cur);
        return;
    }
    for i in start..n {
        cur[depth] = i;
        multisets(n, k, i, cur, depth + 1, f);
    }
}

/// Independent exhaustive search over all points with `n <= n_max` and
/// `t <= t_max`, by meeting in the middle on pair sums.
pub fn brute_force_rh(p: u64, n_max: u64, t_max: u32) -> Result<Vec<RamType>, RamifyError> {
    if p != 0 && !is_prime(p) {
        return Err(RamifyError::BadCharacteristic(p));
    }
    let mut pts = Vec::new();
    for n in 1..=n_max {
        for t in 0..=t_max {
            if let Ok(q) = RamPoint::new(n, t, p) {
                pts.push(q);
            }
            if p == 0 {
                break;
            }
        }
    }
    // machine-word fractions: denominators stay below n_max^2 p^(2 t_max)
    let terms: Vec<Ratio<i128>> = pts
        .iter()
        .map(|q| {
            let pt = if q.t == 0 { 1 } else { (q.p as i128).pow(q.t) };
            Ratio::new(pt - 2, pt * q.n as i128)
        })
        .collect();
    let mut pairs: HashMap<Ratio<i128>, Vec<(usize, usize)>> = HashMap::new();
    for i in 0..pts.len() {
        for j in i..pts.len() {
            pairs.entry(terms[i] + terms[j]).or_default().push((i, j));
        }
    }
    let target = Ratio::new(-11i128, 6);
    let mut found = std::collections::BTreeSet::new();
    for (s, left) in &pairs {
        let Some(right) = pairs.get(&(target - s)) else { continue };
        for &(a, b) in left {
            for &(c, d) in right {
                let mut v = vec![pts[a], pts[b], pts[c], pts[d]];
                v.sort();
                found.insert(v);
            }
        }
    }
    Ok(found.into_iter().map(|points| RamType { p, points }).collect())
}

/// `|G|` from `2g - 2 = |G| (-2 + sum (1 - 1/n_i))` for a cover of the line.
pub fn tame_order(g: u64, orders: &[u64]) -> Result<Rational, RamifyError> {
    if orders.iter().any(|&n| n < 2) {
        return Err(RamifyError::InvalidPoint("branch orders must be at least 2".into()));
    }
    let denom = orders.iter().fold(int(-2), |acc, &n| acc + int(1) - rat(1, n as i64));
    if denom <= Rational::zero() {
        return Err(RamifyError::NotHyperbolic(orders.to_vec()));
    }
    Ok(int(2 * g as i64 - 2) / denom)
}

/// A hyperbolic triangle type and the group order it would force.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleOrder {
    pub triple: [u64; 3],
    #[serde(serialize_with = "serialize_rational")]
    pub order: Rational,
    pub integral: bool,
}

/// Triples `n1 <= n2 <= n3 <= 100` with `sum 1/n_i < 1` whose forced order is
/// at most `15(g - 1)`, sorted by order then triple.
pub fn three_point_explore(g: u64) -> Result<Vec<TripleOrder>, RamifyError> {
    if g < 2 {
        return Err(RamifyError::GenusTooSmall);
    }
    let bound = int(15 * (g as i64 - 1));
    let mut out = Vec::new();
    for a in 2..=100u64 {
        for b in a..=100 {
            for c in b..=100 {
                // order <= 15(g-1)  <=>  1 - sum 1/n >= 2/15
                let (s, d) = (a * b + b * c + a * c, a * b * c);
                if 15 * s > 13 * d {
                    continue;
                }
                let Ok(order) = tame_order(g, &[a, b, c]) else { continue };
                if order <= bound {
                    let integral = order.is_integer();
                    out.push(TripleOrder { triple: [a, b, c], order, integral });
                }
            }
        }
    }
    out.sort_by(|x, y| x.order.cmp(&y.order).then(x.triple.cmp(&y.triple)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_terms() {
        assert_eq!(rh_term(&RamPoint::tame(2, 7).unwrap()), rat(-1, 2));
        assert_eq!(rh_term(&RamPoint::new(1, 1, 5).unwrap()), rat(3, 5));
        assert_eq!(rh_term(&RamPoint::tame(3, 0).unwrap()), rat(-1, 3));
        assert_eq!(rh_term(&RamPoint::new(1, 1, 2).unwrap()), int(0));
    }

    #[test]
    fn point_invariants() {
        assert!(RamPoint::tame(2, 2).is_err());
        assert!(RamPoint::tame(1, 5).is_err());
        assert!(RamPoint::new(3, 1, 5).is_err());
        assert!(RamPoint::new(2, 1, 5).is_ok());
        assert!(RamPoint::new(2, 1, 0).is_err());
        assert!(RamPoint::tame(2, 4).is_err());
    }

    #[test]
    fn unique_solution() {
        let s = solve_rh(7).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].tame_orders().unwrap(), vec![2, 2, 2, 3]);
        assert!(solve_rh(2).unwrap().is_empty());
        assert!(solve_rh(3).unwrap().is_empty());
        assert_eq!(solve_rh(0).unwrap()[0].notes().len(), 1);
        assert!(solve_rh(9).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(tame_order(5, &[2, 2, 2, 3]).unwrap(), int(48));
        assert_eq!(tame_order(8, &[2, 2, 2, 3]).unwrap(), int(84));
        assert_eq!(tame_order(2, &[2, 2, 2, 2, 2]).unwrap(), int(4));
        assert_eq!(tame_order(3, &[2, 3, 7]).unwrap(), int(168));
        assert_eq!(tame_order(2, &[4, 4, 4]).unwrap(), int(8));
        assert_eq!(tame_order(7, &[2, 4, 12]).unwrap(), int(72));
        assert!(tame_order(5, &[2, 2, 2, 2]).is_err());
        assert!(tame_order(5, &[2, 3, 6]).is_err());
    }

    #[test]
    fn three_point_table() {
        let t = three_point_explore(2).unwrap();
        assert!(t.iter().any(|r| r.triple == [4, 4, 4] && r.order == int(8)));
        for tr in [[2, 4, 12], [2, 6, 6], [3, 3, 6], [3, 4, 4]] {
            let r = t.iter().find(|r| r.triple == tr).unwrap();
            assert_eq!(r.order, int(12));
        }
        assert!(t.iter().all(|r| r.order <= int(15)));
    }
}
