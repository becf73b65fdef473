use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Outcome of a single named check: the measured relative residual, the
/// tolerance it was held to, and whether a failure gates the report.
///
/// An informative check records an expected shortfall (for example a flat
/// amplitude convention applied outside its regime) without failing the
/// run; every informative downgrade is accompanied by a binding
/// counterpart and an entry in the report notes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub informative: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            residual,
            tolerance,
            passed: residual.is_finite() && residual <= tolerance,
            informative: false,
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ParamsEcho {
    pub hbar: f64,
    pub c: f64,
    pub q: f64,
    pub mass: f64,
}

/// Full verification record for one constructed state. Serializes with a
/// stable field order and sorted metadata so two runs with identical
/// inputs produce byte-identical JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub dimension: u8,
    pub mode: String,
    pub profile: String,
    pub params: ParamsEcho,
    pub request: BTreeMap<String, String>,
    pub energy: f64,
    pub norm_constant: f64,
    pub checks: Vec<CheckResult>,
    pub paper_notes: Vec<String>,
    pub overall: bool,
}

impl VerificationReport {
    /// A failed binding check fails the report; informative checks never do.
    pub fn recompute_overall(&mut self) {
        self.overall = self.checks.iter().filter(|c| !c.informative).all(|c| c.passed);
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self)
            .map_err(|e| Error::Verify(format!("report serialization: {e}")))
    }
}
