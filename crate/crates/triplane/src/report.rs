//! The versioned construction report: per-stage records, measured
//! invariants, and the overall verdict, serializable as stable JSON.

use serde::{Deserialize, Serialize};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Every stage succeeded and every measured value matches the
    /// published expectations.
    Pass,
    /// A stage failed, retries ran out, or a measured value deviates.
    Fail,
    /// The run completed on an experimental parameter set for which no
    /// published expectations exist.
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportInputs {
    pub b: u32,
    pub alpha1: u32,
    pub prime: u32,
    pub seed: u64,
    pub max_retries: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub index: u32,
    pub name: String,
    /// "ok", "failed", or "skipped".
    pub status: String,
    /// How many times this stage's retry unit was restarted before (or
    /// while) producing this record.
    pub retries: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub data: serde_json::Value,
    pub millis: u64,
}

/// Dimension/degree/genera triple of a projective scheme; dimensions are
/// affine-cone Krull dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeSummary {
    pub dim: i64,
    pub degree: i64,
    pub genera: Vec<i64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultsSummary {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locally_free: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sing_y: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sing_y_residual: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x1: Option<SchemeSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x1_smooth: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x2: Option<SchemeSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_o_x2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k2_x2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha2_derived: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case_label: Option<String>,
    /// (h⁰(S²F(−2)), h⁰(S³F(−2))).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section_checks: Option<(i64, i64)>,
    pub retries_used: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub version: u32,
    pub inputs: ReportInputs,
    pub stages: Vec<StageRecord>,
    /// One line per retry: which stage's check failed and why.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub retry_log: Vec<String>,
    pub results: ResultsSummary,
    pub verdict: Verdict,
}

impl ConstructionReport {
    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Full JSON, timings included.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with per-stage timings removed: identical inputs must produce
    /// byte-identical canonical JSON, and golden files are stored in this
    /// form.
    pub fn canonical_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Some(stages) = v.get_mut("stages").and_then(|s| s.as_array_mut()) {
            for stage in stages {
                if let Some(obj) = stage.as_object_mut() {
                    obj.remove("millis");
                }
            }
        }
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

/// Outcome of a full sweep: one report per (prime, seed, alpha1).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub version: u32,
    pub b: u32,
    pub primes: Vec<u32>,
    pub seeds: Vec<u64>,
    /// K² columns, one row per (prime, seed) in sweep order.
    pub columns: Vec<SweepColumn>,
    pub runs: Vec<ConstructionReport>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepColumn {
    pub prime: u32,
    pub seed: u64,
    /// K²_{X₂} for alpha1 = 1..7; None marks a failed run.
    pub k2: Vec<Option<i64>>,
}

impl SweepReport {
    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
