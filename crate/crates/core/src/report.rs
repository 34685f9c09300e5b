//! Versioned JSON experiment reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::construction::Alpha;

pub const REPORT_SCHEMA: &str = "fsk-experiment-report";
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Alpha>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

/// One verdict. Non-gating checks are reported but do not affect the exit
/// status.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckVerdict {
    pub name: String,
    pub passed: bool,
    pub gating: bool,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub schema: String,
    pub schema_version: u32,
    pub tool_version: String,
    pub command: String,
    pub parameters: Parameters,
    pub checks: Vec<CheckVerdict>,
    /// Counts recomputed from the artifacts (edges, |T|, core size, ...).
    pub counts: BTreeMap<String, u64>,
    /// Artifact name to file path.
    pub artifacts: BTreeMap<String, String>,
    /// Wall-clock milliseconds per stage; excluded from determinism.
    pub timings_ms: BTreeMap<String, f64>,
}

impl ExperimentReport {
    pub fn new(command: &str, parameters: Parameters) -> Self {
        ExperimentReport {
            schema: REPORT_SCHEMA.to_string(),
            schema_version: REPORT_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            parameters,
            checks: Vec::new(),
            counts: BTreeMap::new(),
            artifacts: BTreeMap::new(),
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: Value) -> bool {
        self.push_check(name, passed, true, detail)
    }

    pub fn note(&mut self, name: &str, passed: bool, detail: Value) -> bool {
        self.push_check(name, passed, false, detail)
    }

    fn push_check(&mut self, name: &str, passed: bool, gating: bool, detail: Value) -> bool {
        self.checks.push(CheckVerdict {
            name: name.to_string(),
            passed,
            gating,
            detail,
        });
        passed
    }

    pub fn count(&mut self, name: &str, value: usize) {
        self.counts.insert(name.to_string(), value as u64);
    }

    pub fn verdict(&self, name: &str) -> Option<&CheckVerdict> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Every gating check passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().filter(|c| c.gating).all(|c| c.passed)
    }

    /// The report without timings, for determinism comparisons.
    pub fn without_timings(&self) -> Self {
        ExperimentReport {
            timings_ms: BTreeMap::new(),
            ..self.clone()
        }
    }
}
