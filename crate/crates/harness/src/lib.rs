//! Repeated seeded runs of the optimizer with avg/std reporting and CSV
//! traces.

pub mod config;
mod error;
pub mod experiment;
pub mod output;

pub use config::{
    ExperimentConfig, OutputConfig, PciaOverrides, PenaltyOverrides, StdEstimator, TransformConfig,
};
pub use error::{HarnessError, Result};
pub use experiment::{run_experiment, Experiment, ExperimentReport, ResolvedProblem, RunSummary};
pub use output::{emit_report, emit_runs, emit_trace};
