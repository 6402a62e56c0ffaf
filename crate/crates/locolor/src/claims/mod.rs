//! Registry of executable claims and the report they produce.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

mod checks;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuntimeClass {
    Instant,
    Seconds,
    Minutes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

/// Facts gathered by a check. Every failed requirement lands in
/// `mismatches` with a description, so a Fail always says why.
#[derive(Debug, Default)]
pub struct Evidence {
    facts: Map<String, Value>,
    checks: usize,
    mismatches: Vec<Value>,
    not_applicable: Option<String>,
}

impl Evidence {
    pub fn fact(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("evidence serializes");
        self.facts.insert(key.to_string(), v);
    }

    /// Record a requirement; returns `ok` for chaining.
    pub fn require(&mut self, what: impl Into<String>, ok: bool, detail: impl Serialize) -> bool {
        self.checks += 1;
        if !ok {
            self.mismatches.push(serde_json::json!({
                "requirement": what.into(),
                "detail": serde_json::to_value(detail).expect("evidence serializes"),
            }));
        }
        ok
    }

    pub fn not_applicable(&mut self, why: impl Into<String>) {
        self.not_applicable = Some(why.into());
    }

    fn finish(mut self) -> (Verdict, Value) {
        let verdict = if !self.mismatches.is_empty() {
            Verdict::Fail
        } else if self.not_applicable.is_some() {
            Verdict::NotApplicable
        } else {
            Verdict::Pass
        };
        self.facts.insert("checks".into(), self.checks.into());
        self.facts.insert("mismatches".into(), Value::Array(self.mismatches));
        if let Some(why) = self.not_applicable {
            self.facts.insert("not_applicable".into(), why.into());
        }
        (verdict, Value::Object(self.facts))
    }
}

pub struct Claim {
    pub id: &'static str,
    /// What is being asserted, in plain words.
    pub citation: &'static str,
    pub runtime: RuntimeClass,
    pub check: fn(u64, &mut Evidence),
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: &'static str,
    pub citation: &'static str,
    pub runtime: RuntimeClass,
    pub seed: u64,
    pub verdict: Verdict,
    pub evidence: Value,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub filter: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub summary: Summary,
    pub results: Vec<ClaimResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON report without the timestamp and per-claim wall times.
    pub fn comparable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("timestamp");
        for r in v["results"].as_array_mut().expect("array") {
            r.as_object_mut().expect("object").remove("millis");
        }
        serde_json::to_string_pretty(&v).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let tag = match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::NotApplicable => "N/A ",
            };
            out.push_str(&format!("{tag}  {:<40} {:>7} ms  {}\n", r.id, r.millis, r.citation));
            if r.verdict == Verdict::Fail {
                for m in r.evidence["mismatches"].as_array().into_iter().flatten() {
                    out.push_str(&format!("      {m}\n"));
                }
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} claims: {} pass, {} fail, {} not applicable (seed {})\n",
            s.total, s.pass, s.fail, s.not_applicable, self.seed
        ));
        out
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ClaimsError {
    #[error("invalid claim pattern {0:?}: {1}")]
    InvalidPattern(String, String),
    #[error("no claim matches {0:?}")]
    UnknownPattern(String),
}

pub fn registry() -> &'static [Claim] {
    checks::REGISTRY
}

/// First eight bytes of `sha256(seed_le || id)`.
pub fn sub_seed(seed: u64, id: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(id.as_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"))
}

pub fn matching(filter: &str) -> Result<Vec<&'static Claim>, ClaimsError> {
    let pattern = glob::Pattern::new(filter).map_err(|e| ClaimsError::InvalidPattern(filter.into(), e.to_string()))?;
    let found: Vec<&Claim> = registry().iter().filter(|c| pattern.matches(c.id)).collect();
    if found.is_empty() {
        return Err(ClaimsError::UnknownPattern(filter.into()));
    }
    Ok(found)
}

fn run_one(claim: &Claim, seed: u64) -> ClaimResult {
    let seed = sub_seed(seed, claim.id);
    let start = Instant::now();
    let mut ev = Evidence::default();
    let outcome = catch_unwind(AssertUnwindSafe(|| (claim.check)(seed, &mut ev)));
    if let Err(panic) = outcome {
        let msg = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unknown panic".into());
        ev.require("check completes", false, msg);
    }
    let (verdict, evidence) = ev.finish();
    ClaimResult {
        id: claim.id,
        citation: claim.citation,
        runtime: claim.runtime,
        seed,
        verdict,
        evidence,
        millis: start.elapsed().as_millis() as u64,
    }
}

pub fn run_claims(filter: &str, seed: u64) -> Result<Report, ClaimsError> {
    let claims = matching(filter)?;
    let mut results: Vec<ClaimResult> = claims.par_iter().map(|c| run_one(c, seed)).collect();
    results.sort_by_key(|r| r.id);
    let mut summary = Summary {
        total: results.len(),
        ..Summary::default()
    };
    for r in &results {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::NotApplicable => summary.not_applicable += 1,
        }
    }
    Ok(Report {
        tool: "locolor",
        version: env!("CARGO_PKG_VERSION"),
        seed,
        filter: filter.into(),
        timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        summary,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_lowercase() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(ids.iter().all(|id| id.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || "-.".contains(c))));
    }

    #[test]
    fn unknown_pattern_is_an_error() {
        assert_eq!(run_claims("nonexistent.*", 0).unwrap_err(), ClaimsError::UnknownPattern("nonexistent.*".into()));
        assert!(matches!(run_claims("[", 0), Err(ClaimsError::InvalidPattern(..))));
    }

    #[test]
    fn sub_seeds_depend_on_id() {
        assert_ne!(sub_seed(1, "a"), sub_seed(1, "b"));
        assert_ne!(sub_seed(1, "a"), sub_seed(2, "a"));
        assert_eq!(sub_seed(1, "a"), sub_seed(1, "a"));
    }

    fn failing(_: u64, ev: &mut Evidence) {
        ev.fact("x", 1);
        ev.require("one equals two", 1 == 2, (1, 2));
    }

    fn panicking(_: u64, _: &mut Evidence) {
        panic!("boom");
    }

    #[test]
    fn failures_carry_mismatches() {
        let claim = Claim { id: "t.fail", citation: "", runtime: RuntimeClass::Instant, check: failing };
        let r = run_one(&claim, 0);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.evidence["mismatches"][0]["requirement"], "one equals two");
        assert_eq!(r.evidence["checks"], 1);
        let claim = Claim { id: "t.panic", citation: "", runtime: RuntimeClass::Instant, check: panicking };
        let r = run_one(&claim, 0);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.evidence["mismatches"][0]["detail"], "boom");
    }

    #[test]
    fn not_applicable_needs_no_mismatch() {
        let mut ev = Evidence::default();
        ev.not_applicable("no independent set of the right size");
        assert_eq!(ev.finish().0, Verdict::NotApplicable);
    }
}
