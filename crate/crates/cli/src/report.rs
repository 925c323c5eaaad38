//! Machine-readable run reports.

use std::path::Path;

use ginv_core::{LawReport, PenroseReport};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::io::IoError;

/// A residual printed with 17 significant digits, enough to recover the
/// library value exactly.
#[derive(Debug, Serialize)]
pub struct ResidualEntry {
    pub name: String,
    pub value: Box<RawValue>,
}

impl ResidualEntry {
    pub fn new(name: impl Into<String>, value: f64) -> Self {
        Self {
            name: name.into(),
            value: exact(value),
        }
    }
}

pub(crate) fn exact(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() {
        format!("{x:.16e}")
    } else {
        // JSON has no infinities
        "null".to_string()
    };
    RawValue::from_string(text).expect("valid JSON number")
}

#[derive(Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct ReportFile {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub law_id: Option<String>,
    pub residuals: Vec<ResidualEntry>,
    pub verdict: String,
    pub tolerance: Box<RawValue>,
    pub warnings: Vec<String>,
    pub wall_time_seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

impl ReportFile {
    pub fn new(command: Vec<String>, tolerance: f64) -> Self {
        Self {
            command,
            inputs: Vec::new(),
            law_id: None,
            residuals: Vec::new(),
            verdict: String::new(),
            tolerance: exact(tolerance),
            warnings: Vec::new(),
            wall_time_seconds: 0.0,
            details: None,
        }
    }

    pub fn with_penrose(mut self, r: &PenroseReport) -> Self {
        for (k, v) in r.residuals.iter().enumerate() {
            self.residuals
                .push(ResidualEntry::new(format!("penrose_{}", k + 1), *v));
        }
        self.verdict = if r.pass { "holds" } else { "fails" }.into();
        self
    }

    pub fn with_law(mut self, r: &LawReport) -> Self {
        self.law_id = Some(r.law.name().to_string());
        for res in r.residuals() {
            self.residuals.push(ResidualEntry::new(res.name, res.value));
        }
        self.verdict = verdict_word(r).into();
        self.warnings
            .extend(r.warnings.iter().map(|w| w.to_string()));
        self
    }

    pub fn write(&self, path: &Path) -> Result<(), IoError> {
        let text = serde_json::to_string_pretty(self).expect("serializable");
        std::fs::write(path, text + "\n").map_err(|source| IoError::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

pub fn verdict_word(r: &LawReport) -> &'static str {
    outcome_word(r.outcome())
}

pub fn outcome_word(v: ginv_core::Verdict) -> &'static str {
    match v {
        ginv_core::Verdict::Holds => "holds",
        ginv_core::Verdict::Fails => "fails",
        ginv_core::Verdict::Ambiguous => "ambiguous",
    }
}
