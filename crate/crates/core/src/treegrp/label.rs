use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::TreeError;

/// A finite subgroup type of PGL2 over a field of coprime characteristic.
///
/// Variant order is the canonical sort order used for tree output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexLabel {
    Cyclic(u64),
    Dihedral(u64),
    A4,
    S4,
    A5,
}

impl VertexLabel {
    pub fn cyclic(n: u64) -> Result<Self, TreeError> {
        if n < 2 {
            return Err(TreeError::InvalidLabel(format!("Z{n}")));
        }
        Ok(VertexLabel::Cyclic(n))
    }

    pub fn dihedral(n: u64) -> Result<Self, TreeError> {
        if n < 2 {
            return Err(TreeError::InvalidLabel(format!("D{n}")));
        }
        Ok(VertexLabel::Dihedral(n))
    }

    pub fn order(&self) -> u64 {
        match *self {
            VertexLabel::Cyclic(n) => n,
            VertexLabel::Dihedral(n) => 2 * n,
            VertexLabel::A4 => 12,
            VertexLabel::S4 => 24,
            VertexLabel::A5 => 60,
        }
    }

    /// Orders of the point stabilizers on the fixed points of the action,
    /// i.e. of the maximal cyclic subgroups up to conjugacy, one per orbit.
    pub fn branching_indices(&self) -> Vec<u64> {
        match *self {
            VertexLabel::Cyclic(n) => vec![n, n],
            VertexLabel::Dihedral(n) => {
                let mut v = vec![2, 2, n];
                v.sort_unstable();
                v
            }
            VertexLabel::A4 => vec![2, 3, 3],
            VertexLabel::S4 => vec![2, 3, 4],
            VertexLabel::A5 => vec![2, 3, 5],
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, VertexLabel::Cyclic(_))
    }

    /// Side condition on the residue characteristic, if any.
    pub fn characteristic_note(&self) -> Option<&'static str> {
        match self {
            VertexLabel::A5 => Some("requires p>5"),
            _ => None,
        }
    }

    /// The whole alphabet with cyclic and dihedral parameters up to `n_cap`.
    pub fn alphabet(n_cap: u64) -> Vec<VertexLabel> {
        let mut v: Vec<VertexLabel> = (2..=n_cap).map(VertexLabel::Cyclic).collect();
        v.extend((2..=n_cap).map(VertexLabel::Dihedral));
        v.extend([VertexLabel::A4, VertexLabel::S4, VertexLabel::A5]);
        v
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Cyclic(n) => write!(f, "Z{n}"),
            VertexLabel::Dihedral(n) => write!(f, "D{n}"),
            VertexLabel::A4 => f.write_str("A4"),
            VertexLabel::S4 => f.write_str("S4"),
            VertexLabel::A5 => f.write_str("A5"),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, TreeError> {
        let bad = || TreeError::InvalidLabel(s.to_string());
        match s {
            "A4" => Ok(VertexLabel::A4),
            "S4" => Ok(VertexLabel::S4),
            "A5" => Ok(VertexLabel::A5),
            _ => {
                let (kind, n) = s.split_at(1.min(s.len()));
                let n: u64 = n.parse().map_err(|_| bad())?;
                match kind {
                    "Z" => VertexLabel::cyclic(n),
                    "D" => VertexLabel::dihedral(n),
                    _ => Err(bad()),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branching() {
        assert_eq!(VertexLabel::Dihedral(4).branching_indices(), vec![2, 2, 4]);
        assert_eq!(VertexLabel::Cyclic(7).branching_indices(), vec![7, 7]);
        assert_eq!(VertexLabel::S4.branching_indices(), vec![2, 3, 4]);
        assert_eq!(VertexLabel::A4.branching_indices(), vec![2, 3, 3]);
        assert_eq!(VertexLabel::A5.branching_indices(), vec![2, 3, 5]);
        assert_eq!(VertexLabel::Dihedral(2).branching_indices(), vec![2, 2, 2]);
    }

    #[test]
    fn riemann_hurwitz_on_the_sphere() {
        // a finite group acting on P^1 with branching (e_i): 2 - 2/|G| = sum (1 - 1/e_i)
        use crate::exactalg::{int, rat};
        for l in VertexLabel::alphabet(12) {
            let lhs = int(2) - rat(2, l.order() as i64);
            let rhs = l.branching_indices().iter().fold(int(0), |acc, &e| acc + int(1) - rat(1, e as i64));
            assert_eq!(lhs, rhs, "{l}");
        }
    }

    #[test]
    fn parse_and_order() {
        assert_eq!("D5".parse::<VertexLabel>().unwrap(), VertexLabel::Dihedral(5));
        assert_eq!("Z12".parse::<VertexLabel>().unwrap().order(), 12);
        assert!("D1".parse::<VertexLabel>().is_err());
        assert!("Q8".parse::<VertexLabel>().is_err());
        assert!(VertexLabel::Cyclic(30) < VertexLabel::Dihedral(2));
        assert!(VertexLabel::A4 < VertexLabel::S4 && VertexLabel::S4 < VertexLabel::A5);
        assert_eq!(VertexLabel::A5.characteristic_note(), Some("requires p>5"));
    }
}
