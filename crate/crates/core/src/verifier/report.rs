use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::claims::ClaimId;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_string())
    }
}

/// Parameter point, keyed by name. `BTreeMap` keeps keys in a fixed order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(BTreeMap<String, ParamValue>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, v: impl Into<ParamValue>) -> Self {
        self.0.insert(key.to_string(), v.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&ParamValue> {
        self.0.get(key)
    }

    pub fn int(&self, key: &str) -> Option<i64> {
        match self.0.get(key) {
            Some(ParamValue::Int(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn text(&self, key: &str) -> Option<&str> {
        match self.0.get(key) {
            Some(ParamValue::Text(s)) => Some(s),
            _ => None,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &ParamValue)> {
        self.0.iter()
    }

    pub fn as_map(&self) -> &BTreeMap<String, ParamValue> {
        &self.0
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one check at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Self {
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Self {
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Self {
            status: Status::Skipped,
            witness: Some(reason.into()),
        }
    }

    /// Pass when `ok`, otherwise fail with a lazily built witness.
    pub fn check(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(witness())
        }
    }

    /// First failing outcome of a sequence, or pass.
    pub fn all<I: IntoIterator<Item = Outcome>>(outcomes: I) -> Self {
        outcomes
            .into_iter()
            .find(|o| o.status == Status::Fail)
            .unwrap_or_else(Self::pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub claim: ClaimId,
    pub params: Params,
    pub status: Status,
    /// Present on failure: the discrepancy, re-checkable from `claim` and `params`.
    /// Skipped reports carry the reason here.
    pub witness: Option<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn new(claim: ClaimId, params: Params, outcome: Outcome, elapsed: Duration) -> Self {
        Self {
            claim,
            params,
            status: outcome.status,
            witness: outcome.witness,
            elapsed,
        }
    }

    /// Runs `check` and records its wall-clock time.
    pub fn timed(claim: ClaimId, params: Params, check: impl FnOnce() -> Outcome) -> Self {
        let start = Instant::now();
        let outcome = check();
        Self::new(claim, params, outcome, start.elapsed())
    }

    pub fn status_label(&self) -> &'static str {
        match (self.status, self.claim.is_conjecture()) {
            (Status::Pass, false) => "pass",
            (Status::Pass, true) => "conjecture-consistent",
            (Status::Fail, _) => "fail",
            (Status::Skipped, _) => "skipped",
        }
    }

    pub fn outcome(&self) -> Outcome {
        Outcome {
            status: self.status,
            witness: self.witness.clone(),
        }
    }

    /// One JSON object, fields in fixed order; `elapsed_ms` only with timing.
    pub fn to_json_line(&self, timing: bool) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            claim: &'a str,
            params: &'a BTreeMap<String, ParamValue>,
            status: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<&'a str>,
            #[serde(skip_serializing_if = "Option::is_none")]
            elapsed_ms: Option<f64>,
        }
        let line = Line {
            claim: self.claim.name(),
            params: self.params.as_map(),
            status: self.status_label(),
            witness: self.witness.as_deref(),
            elapsed_ms: timing.then(|| (self.elapsed.as_secs_f64() * 1e6).round() / 1e3),
        };
        serde_json::to_string(&line).expect("report serializes")
    }

    pub fn to_text_line(&self, timing: bool) -> String {
        let mut out = format!(
            "{:<22} {:<17}",
            self.status_label().to_uppercase(),
            self.claim.name()
        );
        let params = self.params.to_string();
        if !params.is_empty() {
            out.push(' ');
            out.push_str(&params);
        }
        if let Some(w) = &self.witness {
            out.push_str(" | ");
            out.push_str(w);
        }
        if timing {
            out.push_str(&format!(" ({:.3} ms)", self.elapsed.as_secs_f64() * 1e3));
        }
        out.trim_end().to_string()
    }
}

/// Pass/fail/skip tallies split by theorem versus conjecture claims.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub theorem_failures: usize,
    pub conjecture_failures: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[Report]) -> Self {
        let mut s = Self::default();
        for r in reports {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Skipped => s.skipped += 1,
                Status::Fail if r.claim.is_conjecture() => s.conjecture_failures += 1,
                Status::Fail => s.theorem_failures += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.passed + self.theorem_failures + self.conjecture_failures + self.skipped
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} checks: {} passed, {} theorem failures, {} conjecture failures, {} skipped",
            self.total(),
            self.passed,
            self.theorem_failures,
            self.conjecture_failures,
            self.skipped
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_line_shape() {
        let r = Report::new(
            ClaimId::EqDnSquare,
            Params::new().with("n", 3u32),
            Outcome::pass(),
            Duration::from_micros(1500),
        );
        assert_eq!(
            r.to_json_line(false),
            r#"{"claim":"EQ_DNSQUARE","params":{"n":3},"status":"pass"}"#
        );
        assert_eq!(
            r.to_json_line(true),
            r#"{"claim":"EQ_DNSQUARE","params":{"n":3},"status":"pass","elapsed_ms":1.5}"#
        );
    }

    #[test]
    fn conjecture_label_and_witness() {
        let r = Report::new(
            ClaimId::ConjQSun1,
            Params::new().with("p", 3u64).with("m", 2u32),
            Outcome::pass(),
            Duration::ZERO,
        );
        assert_eq!(r.status_label(), "conjecture-consistent");
        assert_eq!(
            r.to_text_line(false),
            "CONJECTURE-CONSISTENT  CONJ_Q_SUN1       m=2 p=3"
        );
        let f = Report::new(
            ClaimId::Thm12,
            Params::new().with("which", "x"),
            Outcome::fail("value 1/2"),
            Duration::ZERO,
        );
        assert!(f
            .to_json_line(false)
            .contains(r#""status":"fail","witness":"value 1/2""#));
        assert!(f.to_text_line(false).ends_with("| value 1/2"));
    }

    #[test]
    fn outcome_combinators() {
        assert_eq!(
            Outcome::all([Outcome::pass(), Outcome::pass()]),
            Outcome::pass()
        );
        let o = Outcome::all([Outcome::pass(), Outcome::fail("a"), Outcome::fail("b")]);
        assert_eq!(o.witness.as_deref(), Some("a"));
        assert_eq!(Outcome::check(false, || "w".into()).status, Status::Fail);
    }
}
