use std::fmt;

use super::GroupError;

/// A permutation of `{0, .., n-1}` stored as its image array.
///
/// Products compose left to right: `a * b` applies `a` first, then `b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u16>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { img: (0..n as u16).collect() }
    }

    pub fn from_images(img: Vec<usize>) -> Result<Self, GroupError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &i in &img {
            if i >= n {
                return Err(GroupError::PointOutOfRange { point: i + 1, degree: n });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::Parse(format!("image list repeats {}", i + 1)));
            }
        }
        Ok(Perm { img: img.into_iter().map(|i| i as u16).collect() })
    }

    /// Product of disjoint cycles given as 0-based point lists.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut img: Vec<u16> = (0..n as u16).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for &p in c {
                if p >= n {
                    return Err(GroupError::PointOutOfRange { point: p + 1, degree: n });
                }
                if std::mem::replace(&mut used[p], true) {
                    return Err(GroupError::OverlappingCycles(p + 1));
                }
            }
            for (k, &p) in c.iter().enumerate() {
                img[p] = c[(k + 1) % c.len()] as u16;
            }
        }
        Ok(Perm { img })
    }

    /// Parse 1-based cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse(s: &str, n: usize) -> Result<Self, GroupError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles = Vec::new();
        let mut rest = s.as_str();
        if rest.is_empty() {
            return Err(GroupError::Parse("empty permutation".into()));
        }
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| GroupError::Parse(format!("expected '(' in `{s}`")))?;
            let close = body.find(')').ok_or_else(|| GroupError::Parse(format!("unclosed cycle in `{s}`")))?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let pts = inner
                .split(',')
                .map(|t| match t.parse::<usize>() {
                    Ok(0) | Err(_) => Err(GroupError::Parse(format!("bad point `{t}` in `{s}`"))),
                    Ok(p) => Ok(p - 1),
                })
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(pts);
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.img.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self` then `o`. Panics on degree mismatch.
    pub fn then(&self, o: &Perm) -> Perm {
        assert_eq!(self.degree(), o.degree(), "degree mismatch");
        Perm { img: self.img.iter().map(|&i| o.img[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u16; self.img.len()];
        for (i, &j) in self.img.iter().enumerate() {
            img[j as usize] = i as u16;
        }
        Perm { img }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut r = Perm::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            r = r.then(&base);
        }
        r
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    /// Disjoint cycles of length > 1, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.apply(s);
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Same permutation on `extra` more fixed points, or shifted by `offset`.
    pub fn extend(&self, offset: usize, total: usize) -> Perm {
        let mut img: Vec<u16> = (0..total as u16).collect();
        for (i, &j) in self.img.iter().enumerate() {
            img[offset + i] = (offset + j as usize) as u16;
        }
        Perm { img }
    }
}

impl std::ops::Mul<&Perm> for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.then(rhs)
    }
}

impl fmt::Display for Perm {
    /// 1-based cycle notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return f.write_str("()");
        }
        for c in cs {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse("()", 3).unwrap(), Perm::identity(3));
        assert_eq!(Perm::parse(" (1, 2) ", 2).unwrap().to_string(), "(1,2)");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(Perm::parse("(1,2)(2,3)", 3), Err(GroupError::OverlappingCycles(2)));
        assert_eq!(Perm::parse("(1,4)", 3), Err(GroupError::PointOutOfRange { point: 4, degree: 3 }));
        assert!(Perm::parse("(0,1)", 3).is_err());
        assert!(Perm::parse("(1,2", 3).is_err());
        assert!(Perm::parse("1,2", 3).is_err());
        assert!(Perm::parse("(1,1)", 3).is_err());
    }

    #[test]
    fn left_to_right_product() {
        let a = Perm::parse("(1,2)", 3).unwrap();
        let b = Perm::parse("(2,3)", 3).unwrap();
        // 1 -> 2 -> 3, 3 -> 2, 2 -> 1
        assert_eq!((&a * &b).to_string(), "(1,3,2)");
        assert!((&a * &a.inverse()).is_identity());
        assert_eq!(a.pow(-3), a);
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let a = Perm::parse("(1,2,3)", 4).unwrap();
        let g = Perm::parse("(3,4)", 4).unwrap();
        assert_eq!(a.conjugate_by(&g).to_string(), "(1,2,4)");
    }
}
