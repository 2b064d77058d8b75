use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// Anchors naming the claim each check verifies; documented in the README.
pub const ANCHORS: &[(&str, &str)] = &[
    ("normalizer-trees", "tree products with end labels 2,2,2,3"),
    ("euler-genus", "Euler characteristic -1/12 and genus from group order"),
    ("rh-four-point", "four-point Riemann-Hurwitz types by characteristic"),
    ("catalog-integrity", "group catalog counts 52/13/50/15 and Sylow congruences"),
    ("classification-by-genus", "normalizer quotients onto groups of order 12(g-1)"),
    ("lemma-scope", "amalgam (i) also maps onto A5 in genus 6"),
    ("appendix-exclusions", "order 48/72 exclusions for configurations (a), (b)"),
    ("sylow-five", "order-60 groups with more than one five-Sylow"),
    ("witness-lemmas", "Sylow and kernel lemmas on the genus 5 witness group"),
    ("monomial-symmetry", "monomial stabilizers of the quartic and sextic"),
    ("quartic-bitangents", "the four lines x+-y+-z bitangent to the quartic"),
    ("tangency-orbits", "orbits of the eight tangency points"),
    ("quartic-degenerations", "parameters with a singular quartic fiber"),
    ("special-fibers", "factorizations of the fibers at 2, -2 and infinity"),
    ("conic-pencil", "conic pencil through the tangency points"),
    ("reduction-graphs", "quotients of the reduction dual graphs and their double covers"),
    ("sextic-degenerations", "singular sextic fibers at the degeneration centers"),
];

pub fn anchor_documented(a: &str) -> bool {
    ANCHORS.iter().any(|(k, _)| *k == a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    FlaggedDiscrepancy,
    Conditional,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::FlaggedDiscrepancy => "flagged-discrepancy",
            Status::Conditional => "conditional",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub summary: String,
    pub payload: Value,
}

impl CheckRecord {
    pub fn new(id: &str, anchor: &str, status: Status, summary: impl Into<String>, payload: Value) -> Self {
        debug_assert!(anchor_documented(anchor), "undocumented anchor {anchor}");
        CheckRecord { id: id.to_string(), anchor: anchor.to_string(), status, summary: summary.into(), payload }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub command: String,
    pub warnings: Vec<String>,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    /// Sorts by id and rejects duplicate ids.
    pub fn new(command: &str, mut checks: Vec<CheckRecord>, mut warnings: Vec<String>) -> Result<Self, String> {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        if let Some(w) = checks.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(format!("duplicate check id {}", w[0].id));
        }
        warnings.sort();
        warnings.dedup();
        Ok(VerificationReport { schema_version: SCHEMA_VERSION, command: command.to_string(), warnings, checks })
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// 0 unless some check failed.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = writeln!(s, "{:<19} {:<width$}  {}", c.status.as_str(), c.id, c.summary);
        }
        let count = |st: Status| self.checks.iter().filter(|c| c.status == st).count();
        let _ = writeln!(
            s,
            "{} checks: {} pass, {} fail, {} flagged-discrepancy, {} conditional",
            self.checks.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::FlaggedDiscrepancy),
            count(Status::Conditional)
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn ordering_and_exit_code() {
        let r = VerificationReport::new(
            "t",
            vec![
                CheckRecord::new("b", "euler-genus", Status::FlaggedDiscrepancy, "x", json!({})),
                CheckRecord::new("a", "euler-genus", Status::Pass, "y", json!(null)),
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(r.checks[0].id, "a");
        assert_eq!(r.exit_code(), 0);
        assert!(r.to_json().contains("\"flagged-discrepancy\""));
        let r = VerificationReport::new("t", vec![CheckRecord::new("a", "euler-genus", Status::Fail, "", json!(0))], vec![]).unwrap();
        assert_eq!(r.exit_code(), 1);
        let dup = vec![
            CheckRecord::new("a", "euler-genus", Status::Pass, "", json!(0)),
            CheckRecord::new("a", "euler-genus", Status::Pass, "", json!(0)),
        ];
        assert!(VerificationReport::new("t", dup, vec![]).is_err());
    }
}
