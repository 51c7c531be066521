use rayon::prelude::*;

use pcia::benchmarks::{load_matrix, load_vector, Matrix};
use pcia::{
    lookup_function, lookup_problem, make_transformed, max_violation, optimize,
    penalized_objective, BenchmarkDescriptor, Objective, PenalizedObjective, RunResult,
    SearchSpace, Sense, TransformedObjective,
};

use crate::config::{ExperimentConfig, StdEstimator};
use crate::error::{HarnessError, Result};
use crate::output::{emit_report, emit_runs, emit_trace};

/// A problem ready to optimize.
#[derive(Debug, Clone)]
pub enum ResolvedProblem {
    Benchmark(BenchmarkDescriptor),
    Transformed(TransformedObjective),
    Constrained(PenalizedObjective),
}

impl ResolvedProblem {
    /// Look up the problem and load any transform files.
    pub fn resolve(config: &ExperimentConfig) -> Result<Self> {
        let name = config.problem.trim();
        if name.starts_with('G') {
            if config.transform.is_some() {
                return Err(HarnessError::Config(format!(
                    "{name}: transforms apply to F problems only"
                )));
            }
            let problem = lookup_problem(name).map_err(HarnessError::Problem)?;
            if let Some(d) = config.dim {
                if d != problem.dim() {
                    return Err(HarnessError::Config(format!(
                        "{name} has fixed dimension {}, got {d}",
                        problem.dim()
                    )));
                }
            }
            let penalty = config.penalty.resolve(problem.default_penalty());
            let objective =
                penalized_objective(&problem, &penalty).map_err(HarnessError::Problem)?;
            return Ok(Self::Constrained(objective));
        }

        let mut base = lookup_function(name).map_err(HarnessError::Problem)?;
        if let Some(d) = config.dim {
            base = base.with_dim(d).map_err(HarnessError::Problem)?;
        }
        let Some(t) = &config.transform else {
            return Ok(Self::Benchmark(base));
        };
        let dim = base.dim();
        let rotation = match &t.rotation {
            Some(path) => load_matrix(path, dim).map_err(HarnessError::Problem)?,
            None => Matrix::identity(dim),
        };
        let shift = match &t.shift {
            Some(path) => load_vector(path, dim).map_err(HarnessError::Problem)?,
            None => vec![0.0; dim],
        };
        let wrapped =
            make_transformed(base, shift, rotation, t.bias).map_err(HarnessError::Problem)?;
        Ok(Self::Transformed(wrapped))
    }

    pub fn name(&self) -> String {
        match self {
            Self::Benchmark(d) => d.name().to_string(),
            Self::Transformed(t) => format!("{}-transformed", t.base().name()),
            Self::Constrained(p) => p.problem().name().to_string(),
        }
    }

    pub fn objective(&self) -> &dyn Objective {
        match self {
            Self::Benchmark(d) => d,
            Self::Transformed(t) => t,
            Self::Constrained(p) => p,
        }
    }

    pub fn space(&self) -> &SearchSpace {
        match self {
            Self::Benchmark(d) => d.space(),
            Self::Transformed(t) => t.space(),
            Self::Constrained(p) => p.problem().space(),
        }
    }

    pub fn sense(&self) -> Sense {
        match self {
            Self::Constrained(p) => p.problem().sense(),
            _ => Sense::Minimize,
        }
    }

    /// Final value of a run in the problem's own sense.
    pub fn reported_value(&self, run: &RunResult) -> f64 {
        self.sense().flip(run.best_path.cost())
    }

    /// Constraint violation of a run's best path; zero for unconstrained problems.
    pub fn violation(&self, run: &RunResult) -> f64 {
        match self {
            Self::Constrained(p) => max_violation(
                p.problem(),
                run.best_path.position(),
                p.config().eq_tolerance,
            )
            .expect("best path has the problem's dimension"),
            _ => 0.0,
        }
    }
}

/// One repeat's outcome, as written to the per-run CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub repeat: usize,
    pub seed: u64,
    /// Final best value in the problem's own sense.
    pub value: f64,
    pub evaluations: u64,
    pub restarts: usize,
    pub max_violation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub problem: String,
    pub repeats: usize,
    pub avg: f64,
    pub std: f64,
    /// Best and worst final value in the problem's own sense.
    pub best: f64,
    pub worst: f64,
    pub mean_evals: f64,
    pub mean_restarts: f64,
    pub runs: Vec<RunSummary>,
}

impl ExperimentReport {
    pub fn from_runs(
        problem: String,
        sense: Sense,
        runs: Vec<RunSummary>,
        estimator: StdEstimator,
    ) -> Self {
        let values: Vec<f64> = runs.iter().map(|r| r.value).collect();
        let n = values.len() as f64;
        let avg = values.iter().sum::<f64>() / n;
        let ss: f64 = values.iter().map(|v| (v - avg).powi(2)).sum();
        let std = match estimator {
            StdEstimator::Population => (ss / n).sqrt(),
            StdEstimator::Sample if values.len() > 1 => (ss / (n - 1.0)).sqrt(),
            StdEstimator::Sample => 0.0,
        };
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let (best, worst) = match sense {
            Sense::Minimize => (min, max),
            Sense::Maximize => (max, min),
        };
        Self {
            problem,
            repeats: runs.len(),
            avg,
            std,
            best,
            worst,
            mean_evals: runs.iter().map(|r| r.evaluations as f64).sum::<f64>() / n,
            mean_restarts: runs.iter().map(|r| r.restarts as f64).sum::<f64>() / n,
            runs,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        self.runs.iter().map(|r| r.value).collect()
    }

    pub fn median(&self) -> f64 {
        let mut v = self.values();
        v.sort_by(f64::total_cmp);
        let n = v.len();
        if n % 2 == 1 {
            v[n / 2]
        } else {
            0.5 * (v[n / 2 - 1] + v[n / 2])
        }
    }

    /// One-line summary in scientific notation.
    pub fn summary(&self) -> String {
        format!(
            "{}: avg {:.4e} std {:.4e} best {:.4e} worst {:.4e} ({} runs, {:.0} evals, {:.1} restarts)",
            self.problem,
            self.avg,
            self.std,
            self.best,
            self.worst,
            self.repeats,
            self.mean_evals,
            self.mean_restarts
        )
    }
}

/// A finished experiment: the report plus every run's full result.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub report: ExperimentReport,
    pub results: Vec<RunResult>,
}

/// Validate and resolve `config`, run its repeats in parallel and write the
/// configured outputs. Results are ordered by repeat index.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Experiment> {
    config.validate()?;
    let problem = ResolvedProblem::resolve(config)?;
    if let Some(dir) = &config.output.trace_dir {
        std::fs::create_dir_all(dir).map_err(|source| HarnessError::Output {
            path: dir.clone(),
            source,
        })?;
    }

    let results = (0..config.repeats)
        .into_par_iter()
        .map(|r| {
            let cfg = config.pcia_for_repeat(r);
            optimize(problem.objective(), problem.space(), &cfg)
                .map_err(|source| HarnessError::Run { repeat: r, source })
        })
        .collect::<Result<Vec<_>>>()?;

    let runs = results
        .iter()
        .enumerate()
        .map(|(repeat, res)| RunSummary {
            repeat,
            seed: res.seed,
            value: problem.reported_value(res),
            evaluations: res.evaluations,
            restarts: res.restarts,
            max_violation: problem.violation(res),
        })
        .collect();
    let report = ExperimentReport::from_runs(problem.name(), problem.sense(), runs, config.std);

    if let Some(path) = &config.output.report {
        emit_report(&report, path)?;
    }
    if let Some(path) = &config.output.runs {
        emit_runs(&report, path)?;
    }
    if let Some(dir) = &config.output.trace_dir {
        for (r, res) in results.iter().enumerate() {
            emit_trace(res, &dir.join(format!("{}_run{r:03}.csv", report.problem)))?;
        }
    }
    Ok(Experiment { report, results })
}
