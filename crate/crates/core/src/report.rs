//! Structured pass/fail results shared by every checker.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one verification. A failing report always carries a witness.
///
/// Serialised as one JSON object per line with fields in the order
/// `identity, params, status, witness?, seed?, details?, millis?`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub details: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub millis: Option<u64>,
}

impl VerifyReport {
    pub fn new(identity: impl Into<String>) -> Self {
        VerifyReport {
            identity: identity.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witness: None,
            seed: None,
            details: BTreeMap::new(),
            millis: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Display) {
        self.details.insert(key.to_string(), value.to_string());
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Marks the report failed. Only the first witness is kept.
    pub fn fail(&mut self, witness: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::Fail;
            self.witness = Some(witness.into());
        }
    }

    /// Folds a sub-check into this report.
    pub fn absorb(&mut self, sub: &VerifyReport) {
        if !sub.passed() {
            let w = sub.witness.clone().unwrap_or_default();
            self.fail(format!("{}: {}", sub.identity, w));
        }
        for (k, v) in &sub.details {
            self.details.insert(format!("{}.{}", sub.identity, k), v.clone());
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialisation cannot fail")
    }

    pub fn without_timing(mut self) -> Self {
        self.millis = None;
        self
    }
}

/// Runs `f` and stamps the elapsed wall time into the returned report.
pub fn timed(f: impl FnOnce() -> VerifyReport) -> VerifyReport {
    let start = Instant::now();
    let mut report = f();
    report.millis = Some(start.elapsed().as_millis() as u64);
    report
}
