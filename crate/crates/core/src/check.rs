//! Small pass/fail result carried by the verification operations.

use serde::Serialize;

/// Outcome of one falsifiable check: either it passed, or it carries a
/// rendered counterexample.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub pass: bool,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn pass() -> Self {
        Self {
            pass: true,
            counterexample: None,
        }
    }

    pub fn fail(counterexample: impl Into<String>) -> Self {
        Self {
            pass: false,
            counterexample: Some(counterexample.into()),
        }
    }
}
