//! CSV writers. Numbers are written with round-trip precision.

use std::fs::{File, OpenOptions};
use std::path::Path;

use pcia::RunResult;

use crate::error::{HarnessError, Result};
use crate::experiment::ExperimentReport;

pub const REPORT_HEADER: [&str; 8] = [
    "problem",
    "repeats",
    "avg",
    "std",
    "best",
    "worst",
    "mean_evals",
    "mean_restarts",
];
pub const TRACE_HEADER: [&str; 4] = ["iteration", "best_cost", "evaluations", "restart_flag"];
pub const RUNS_HEADER: [&str; 7] = [
    "problem",
    "repeat",
    "seed",
    "value",
    "evaluations",
    "restarts",
    "max_violation",
];

fn open(path: &Path, append: bool) -> Result<File> {
    let mut opts = OpenOptions::new();
    if append {
        opts.append(true).create(true);
    } else {
        opts.write(true).create(true).truncate(true);
    }
    opts.open(path).map_err(|source| HarnessError::Output {
        path: path.to_path_buf(),
        source,
    })
}

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> HarnessError + '_ {
    move |source| HarnessError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

/// Append one report row, writing the header first if the file is new or empty.
pub fn emit_report(report: &ExperimentReport, path: &Path) -> Result<()> {
    let file = open(path, true)?;
    let fresh = file
        .metadata()
        .map_err(|source| HarnessError::Output {
            path: path.to_path_buf(),
            source,
        })?
        .len()
        == 0;
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(file);
    let err = csv_err(path);
    if fresh {
        w.write_record(REPORT_HEADER).map_err(&err)?;
    }
    w.write_record([
        report.problem.clone(),
        report.repeats.to_string(),
        report.avg.to_string(),
        report.std.to_string(),
        report.best.to_string(),
        report.worst.to_string(),
        report.mean_evals.to_string(),
        report.mean_restarts.to_string(),
    ])
    .map_err(&err)?;
    w.flush().map_err(|source| HarnessError::Output {
        path: path.to_path_buf(),
        source,
    })
}

/// Write every run of a report, replacing `path`.
pub fn emit_runs(report: &ExperimentReport, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_writer(open(path, false)?);
    let err = csv_err(path);
    w.write_record(RUNS_HEADER).map_err(&err)?;
    for r in &report.runs {
        w.write_record([
            report.problem.clone(),
            r.repeat.to_string(),
            r.seed.to_string(),
            r.value.to_string(),
            r.evaluations.to_string(),
            r.restarts.to_string(),
            r.max_violation.to_string(),
        ])
        .map_err(&err)?;
    }
    w.flush().map_err(|source| HarnessError::Output {
        path: path.to_path_buf(),
        source,
    })
}

/// Write one row per iteration of `result`, replacing `path`.
pub fn emit_trace(result: &RunResult, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_writer(open(path, false)?);
    let err = csv_err(path);
    w.write_record(TRACE_HEADER).map_err(&err)?;
    let mut restarts = result.restart_iterations.iter().peekable();
    for (i, (cost, evals)) in result
        .best_cost_trace
        .iter()
        .zip(&result.evaluation_trace)
        .enumerate()
    {
        let iteration = i + 1;
        let flag = if restarts.peek() == Some(&&iteration) {
            restarts.next();
            1
        } else {
            0
        };
        w.write_record([
            iteration.to_string(),
            cost.to_string(),
            evals.to_string(),
            flag.to_string(),
        ])
        .map_err(&err)?;
    }
    w.flush().map_err(|source| HarnessError::Output {
        path: path.to_path_buf(),
        source,
    })
}
