//! End-to-end construction of general triple planes branched over curves
//! with b = 8: a staged, seeded pipeline from a rank-2 Steiner bundle on
//! the projective plane to the adjoint surface X₂ in P⁵, with every
//! genericity gate of the construction checked exactly over a prime field
//! and the whole run captured in a versioned JSON report.

pub mod commands;
pub mod report;
pub mod stages;
pub mod sweep;

pub use report::{
    ConstructionReport, ReportInputs, ResultsSummary, SchemeSummary, StageRecord, SweepColumn,
    SweepReport, Verdict, REPORT_VERSION,
};
pub use stages::{
    construct_type_vii, ConstructionState, PipelineConfig, PipelineError, PipelineRun,
    EXHAUSTIVE_CORROBORATION_CAP,
};
pub use sweep::{sweep, sweep_with, SweepConfig};
