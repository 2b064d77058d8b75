use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use super::ClassifyError;
use crate::permgrp::{find_isomorphism, fingerprint, Perm, PermGroup};

/// Number of isomorphism classes expected for each order in the catalog.
pub const EXPECTED_COUNTS: [(usize, usize); 4] = [(48, 52), (60, 13), (72, 50), (84, 15)];

/// One `group ...` line of a catalog file.
#[derive(Clone, Debug)]
pub struct CatalogRecord {
    pub line: usize,
    pub order: usize,
    pub id: Option<String>,
    pub name: String,
    pub degree: usize,
    pub group: PermGroup,
}

impl CatalogRecord {
    /// `id` when present, else `line N`.
    pub fn label(&self) -> String {
        match &self.id {
            Some(id) => format!("{} [{}]", id, self.name),
            None => format!("line {} [{}]", self.line, self.name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IntegrityIssue {
    OrderMismatch { record: String, declared: usize, computed: usize },
    IsomorphicPair { first: String, second: String },
    CountMismatch { order: usize, found: usize, expected: usize },
    UnexpectedOrder { record: String, order: usize },
}

impl fmt::Display for IntegrityIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntegrityIssue::OrderMismatch { record, declared, computed } => {
                write!(f, "{record}: declared order {declared}, generators give {computed}")
            }
            IntegrityIssue::IsomorphicPair { first, second } => write!(f, "{first} and {second} are isomorphic"),
            IntegrityIssue::CountMismatch { order, found, expected } => write!(f, "{order}:{found} != {expected}"),
            IntegrityIssue::UnexpectedOrder { record, order } => write!(f, "{record}: order {order} outside 48/60/72/84"),
        }
    }
}

/// Result of the catalog checks.
#[derive(Clone, Debug, Serialize)]
pub struct IntegrityReport {
    /// Records per order, ascending.
    pub counts: Vec<(usize, usize)>,
    pub issues: Vec<IntegrityIssue>,
}

impl IntegrityReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }

    /// Whether the records of this order passed every check.
    pub fn order_complete(&self, order: usize) -> bool {
        let expected = EXPECTED_COUNTS.iter().find(|e| e.0 == order).map(|e| e.1);
        let found = self.counts.iter().find(|c| c.0 == order).map_or(0, |c| c.1);
        expected == Some(found)
            && !self.issues.iter().any(|i| match i {
                IntegrityIssue::OrderMismatch { declared, .. } => *declared == order,
                IntegrityIssue::IsomorphicPair { .. } => false,
                IntegrityIssue::CountMismatch { order: o, .. } => *o == order,
                IntegrityIssue::UnexpectedOrder { .. } => false,
            })
    }

    /// One-line summary such as `48:52 60:13 72:50 84:15 OK`.
    pub fn summary(&self) -> String {
        let counts: Vec<String> = self.counts.iter().map(|(o, c)| format!("{o}:{c}")).collect();
        let status = if self.is_ok() { "OK".to_string() } else { format!("FAILED ({} issues)", self.issues.len()) };
        format!("{} {}", counts.join(" "), status)
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub records: Vec<CatalogRecord>,
}

fn tokenize(line: &str) -> Result<Vec<(String, String)>, String> {
    let mut out = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let eq = rest.find('=').ok_or_else(|| format!("expected key=value near `{rest}`"))?;
        let key = rest[..eq].trim().to_string();
        if key.contains(char::is_whitespace) || key.is_empty() {
            return Err(format!("bad key `{key}`"));
        }
        let after = &rest[eq + 1..];
        let (value, tail) = if let Some(q) = after.strip_prefix('"') {
            let end = q.find('"').ok_or("unterminated quote")?;
            (q[..end].to_string(), &q[end + 1..])
        } else {
            let end = after.find(char::is_whitespace).unwrap_or(after.len());
            (after[..end].to_string(), &after[end..])
        };
        out.push((key, value));
        rest = tail.trim_start();
    }
    Ok(out)
}

impl Catalog {
    /// Parse catalog text. Order recomputation and isomorphism checks are
    /// left to [`Catalog::verify`].
    pub fn parse(text: &str) -> Result<Catalog, ClassifyError> {
        let parsed: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let records = parsed
            .par_iter()
            .map(|&(line, l)| Self::parse_record(line, l))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Catalog { records })
    }

    fn parse_record(line: usize, l: &str) -> Result<CatalogRecord, ClassifyError> {
        let err = |msg: String| ClassifyError::Parse { line, msg };
        let body = l.strip_prefix("group").filter(|b| b.starts_with(char::is_whitespace)).ok_or_else(|| err("record must start with `group`".into()))?;
        let fields: BTreeMap<String, String> = tokenize(body).map_err(err)?.into_iter().collect();
        let get = |k: &str| fields.get(k).ok_or_else(|| err(format!("missing field `{k}`")));
        let order: usize = get("order")?.parse().map_err(|_| err("bad order".into()))?;
        let degree: usize = get("degree")?.parse().map_err(|_| err("bad degree".into()))?;
        let name = get("name")?.clone();
        let gens_text = get("gens")?;
        let gens = gens_text
            .split(';')
            .map(|g| Perm::parse(g, degree))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| err(e.to_string()))?;
        let group = PermGroup::generate(degree, gens).map_err(|e| err(e.to_string()))?.named(&name);
        Ok(CatalogRecord { line, order, id: fields.get("id").cloned(), name, degree, group })
    }

    pub fn from_path(path: &Path) -> Result<Catalog, ClassifyError> {
        let text = std::fs::read_to_string(path).map_err(|e| ClassifyError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Order recomputation, per-order counts, pairwise non-isomorphism.
    pub fn verify(&self) -> IntegrityReport {
        let mut issues = Vec::new();
        let mut by_order: BTreeMap<usize, Vec<&CatalogRecord>> = BTreeMap::new();
        for r in &self.records {
            if r.group.order() != r.order {
                issues.push(IntegrityIssue::OrderMismatch { record: r.label(), declared: r.order, computed: r.group.order() });
            }
            if !EXPECTED_COUNTS.iter().any(|e| e.0 == r.order) {
                issues.push(IntegrityIssue::UnexpectedOrder { record: r.label(), order: r.order });
            }
            by_order.entry(r.order).or_default().push(r);
        }
        for (order, expected) in EXPECTED_COUNTS {
            let found = by_order.get(&order).map_or(0, Vec::len);
            if found != expected {
                issues.push(IntegrityIssue::CountMismatch { order, found, expected });
            }
        }
        // fingerprints in parallel, then exact tests inside equal-fingerprint buckets
        self.records.par_iter().for_each(|r| {
            fingerprint(&r.group);
        });
        let mut pairs = Vec::new();
        for recs in by_order.values() {
            for i in 0..recs.len() {
                for j in i + 1..recs.len() {
                    let (a, b) = (&recs[i].group, &recs[j].group);
                    if a.order() == b.order() && fingerprint(a) == fingerprint(b) {
                        pairs.push((recs[i], recs[j]));
                    }
                }
            }
        }
        let iso: Vec<bool> = pairs.par_iter().map(|(a, b)| find_isomorphism(&a.group, &b.group).is_some()).collect();
        for ((a, b), same) in pairs.iter().zip(iso) {
            if same {
                issues.push(IntegrityIssue::IsomorphicPair { first: a.label(), second: b.label() });
            }
        }
        IntegrityReport { counts: by_order.iter().map(|(o, r)| (*o, r.len())).collect(), issues }
    }

    pub fn of_order(&self, order: usize) -> impl Iterator<Item = &CatalogRecord> {
        self.records.iter().filter(move |r| r.order == order)
    }
}

/// Parse and verify; any integrity issue is an error.
pub fn load_catalog(path: &Path) -> Result<(Catalog, IntegrityReport), ClassifyError> {
    let cat = Catalog::from_path(path)?;
    let report = cat.verify();
    if !report.is_ok() {
        return Err(ClassifyError::Integrity(report.issues.iter().map(|i| i.to_string()).collect()));
    }
    Ok((cat, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
# two groups of order 60
group order=60 id=60.5 name=\"A5\" degree=5 gens=(1,2,3,4,5);(1,2,3)
group order=60 name=\"C60\" degree=12 gens=(1,2,3,4);(5,6,7);(8,9,10,11,12)
";

    #[test]
    fn parse_small_catalog() {
        let cat = Catalog::parse(SMALL).unwrap();
        assert_eq!(cat.records.len(), 2);
        assert_eq!(cat.records[0].group.order(), 60);
        assert_eq!(cat.records[0].id.as_deref(), Some("60.5"));
        assert_eq!(cat.records[1].line, 3);
        let rep = cat.verify();
        assert!(rep.issues.contains(&IntegrityIssue::CountMismatch { order: 60, found: 2, expected: 13 }));
        assert!(!rep.issues.iter().any(|i| matches!(i, IntegrityIssue::IsomorphicPair { .. })));
        assert!(rep.summary().starts_with("60:2 FAILED"));
    }

    #[test]
    fn duplicate_is_reported() {
        let text = format!("{SMALL}group order=60 id=dup name=\"A5 again\" degree=6 gens=(1,2,3,4,5);(1,2,3)\n");
        let rep = Catalog::parse(&text).unwrap().verify();
        assert!(rep.issues.iter().any(|i| matches!(i,
            IntegrityIssue::IsomorphicPair { first, second } if first.contains("60.5") && second.contains("dup"))));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = Catalog::parse("# c\n\ngroup order=60 name=\"x\" degree=3 gens=(1,4)\n").unwrap_err();
        assert!(matches!(e, ClassifyError::Parse { line: 3, .. }));
        let e = Catalog::parse("group order=60 name=\"x\" gens=(1,2)\n").unwrap_err();
        assert!(matches!(e, ClassifyError::Parse { line: 1, .. }));
        assert!(Catalog::parse("grp order=1\n").is_err());
        assert!(Catalog::parse("group order=2 name=\"x degree=2 gens=(1,2)\n").is_err());
    }

    #[test]
    fn wrong_declared_order() {
        let rep = Catalog::parse("group order=48 name=\"S3\" degree=3 gens=(1,2,3);(1,2)\n").unwrap().verify();
        assert!(rep.issues.contains(&IntegrityIssue::OrderMismatch {
            record: "line 1 [S3]".into(),
            declared: 48,
            computed: 6
        }));
    }
}
