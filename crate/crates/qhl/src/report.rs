use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use qhl_core::exactpoly::{Context, Poly};
use qhl_core::Comparison;

/// sha256 of a canonical JSON string, hex encoded.
pub fn digest(canonical: &str) -> String {
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CaseResult {
    pub id: String,
    pub pass: bool,
    pub left: String,
    pub right: String,
}

impl CaseResult {
    /// Compare two values already rendered as canonical JSON.
    pub fn from_json(id: impl Into<String>, left: &str, right: &str) -> Self {
        Self {
            id: id.into(),
            pass: left == right,
            left: digest(left),
            right: digest(right),
        }
    }

    pub fn from_comparison<C>(cmp: &Comparison<C>) -> Self
    where
        C: Context + Serialize + serde::de::DeserializeOwned,
    {
        Self::from_polys(cmp.case.clone(), &cmp.left, &cmp.right)
    }

    pub fn from_polys<C>(id: impl Into<String>, left: &Poly<C>, right: &Poly<C>) -> Self
    where
        C: Context + Serialize + serde::de::DeserializeOwned,
    {
        Self::from_json(id, &left.to_json(), &right.to_json())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Value,
    pub seed: u64,
    pub pass: bool,
    pub cases: Vec<CaseResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl VerificationReport {
    /// Cases are sorted by identifier so the report does not depend on the
    /// order in which they were computed.
    pub fn new(suite: &str, params: Value, seed: u64, mut cases: Vec<CaseResult>) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        Self {
            suite: suite.to_string(),
            params,
            seed,
            pass: cases.iter().all(|c| c.pass),
            cases,
            elapsed_ms: None,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "{status} {} ({} cases, seed {}) {}",
            self.suite,
            self.cases.len(),
            self.seed,
            self.params
        );
        for c in &self.cases {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "  {mark} {}  {} {}", c.id, &c.left[..12], &c.right[..12]);
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(s, "  elapsed {ms} ms");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn cases_sorted_and_pass_aggregated() {
        let cases = vec![
            CaseResult::from_json("b", "1", "1"),
            CaseResult::from_json("a", "1", "2"),
        ];
        let r = VerificationReport::new("demo", json!({"m": 2}), 7, cases);
        assert_eq!(r.cases[0].id, "a");
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
        assert!(r.to_json().starts_with(r#"{"suite":"demo","params":{"m":2},"seed":7,"pass":false"#));
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
