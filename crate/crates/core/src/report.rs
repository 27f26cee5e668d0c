//! Pass/fail records produced by the verification suites.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// Short description of the inputs, e.g. `n=3 T=1|2|21`.
    pub inputs: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, inputs: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            inputs: inputs.into(),
            passed,
            detail: detail.into(),
        }
    }

    pub fn pass(id: impl Into<String>, inputs: impl Into<String>) -> Self {
        Self::new(id, inputs, true, "")
    }

    pub fn fail(id: impl Into<String>, inputs: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(id, inputs, false, detail)
    }
}

/// Outcome of one suite. Wall time is kept out of the serialized form so that
/// reports are byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
    /// Informational notes that are not failures.
    pub findings: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, records: Vec<CheckRecord>, wall_time: Duration) -> Self {
        let passed = records.iter().filter(|r| r.passed).count();
        Self {
            suite: suite.into(),
            failed: records.len() - passed,
            passed,
            records,
            findings: Vec::new(),
            wall_time,
        }
    }

    pub fn with_findings(mut self, findings: Vec<String>) -> Self {
        self.findings = findings;
        self
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && !self.records.is_empty()
    }

    /// Concatenates several suite reports under one name.
    pub fn merge(suite: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        let wall_time = parts.iter().map(|p| p.wall_time).sum();
        let mut records = Vec::new();
        let mut findings = Vec::new();
        for p in parts {
            records.extend(p.records.into_iter().map(|mut r| {
                r.id = format!("{}/{}", p.suite, r.id);
                r
            }));
            findings.extend(p.findings);
        }
        Self::new(suite, records, wall_time).with_findings(findings)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            write!(f, "{} {} [{}]", if r.passed { "PASS" } else { "FAIL" }, r.id, r.inputs)?;
            if !r.detail.is_empty() {
                write!(f, " {}", r.detail)?;
            }
            writeln!(f)?;
        }
        for note in &self.findings {
            writeln!(f, "NOTE {note}")?;
        }
        write!(f, "{}: {} passed, {} failed", self.suite, self.passed, self.failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_follow_records() {
        let r = VerificationReport::new(
            "x",
            vec![CheckRecord::pass("a", ""), CheckRecord::fail("b", "", "bad")],
            Duration::ZERO,
        );
        assert_eq!((r.passed, r.failed), (1, 1));
        assert!(!r.all_passed());
        let m = VerificationReport::merge("all", vec![r.clone(), r]);
        assert_eq!(m.records.len(), 4);
        assert_eq!(m.records[0].id, "x/a");
        assert!(VerificationReport::new("empty", vec![], Duration::ZERO).failed == 0);
    }
}
