use std::fmt::Display;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of checking one claim at one parameter point.
///
/// A failing report always carries a witness holding enough data to
/// recompute the disagreement from the primitive operations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub domain_size: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>, parameters: Value) -> Self {
        VerificationReport {
            claim: claim.into(),
            parameters,
            status: Status::Pass,
            lhs: None,
            rhs: None,
            witness: None,
            domain_size: None,
            elapsed_ms: None,
        }
    }

    pub fn sides(mut self, lhs: impl Display, rhs: impl Display) -> Self {
        self.lhs = Some(lhs.to_string());
        self.rhs = Some(rhs.to_string());
        self
    }

    pub fn domain_size(mut self, size: u64) -> Self {
        self.domain_size = Some(size);
        self
    }

    /// Marks the report failed unless it already is.
    pub fn fail(mut self, witness: Value) -> Self {
        if self.status == Status::Pass {
            self.status = Status::Fail;
            self.witness = Some(witness);
        }
        self
    }

    /// Fails with `witness` when `ok` is false.
    pub fn require(self, ok: bool, witness: impl FnOnce() -> Value) -> Self {
        if ok {
            self
        } else {
            self.fail(witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Pass/fail totals over a sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl SweepSummary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let passed = reports.iter().filter(|r| r.passed()).count();
        SweepSummary {
            total: reports.len(),
            passed,
            failed: reports.len() - passed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}
