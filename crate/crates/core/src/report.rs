use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one named verification.
///
/// `witness` is set exactly when the check failed. A check skipped by budget
/// is reported as passed with `skipped` set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub passed: bool,
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            params: BTreeMap::new(),
            passed: true,
            witness: None,
            skipped: false,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    /// Records a failure; only the first witness is kept.
    pub fn fail(&mut self, witness: impl Into<String>) {
        if self.passed {
            self.passed = false;
            self.witness = Some(witness.into());
        }
    }

    pub fn skip(mut self, why: &str) -> Self {
        self.skipped = true;
        self.params.insert("skip_reason".into(), why.into());
        self
    }

    /// Folds a `Result` into the report: `Err` becomes a failure.
    pub fn absorb<T, E: std::fmt::Display>(&mut self, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(e.to_string());
                None
            }
        }
    }
}
