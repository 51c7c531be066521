//! Experiment configuration, read from TOML.
//!
//! ```toml
//! problem = "F16"
//! repeats = 30
//! base_seed = 0
//!
//! [pcia]
//! pop_size = 120
//! max_iters = 1000
//!
//! [penalty]
//! alpha = 2
//! pc = 1e6
//! eq_tolerance = 1e-4
//!
//! [output]
//! report = "report.csv"
//! trace_dir = "traces"
//! ```
//!
//! Every [`PciaConfig`] field except `seed` may appear under `[pcia]`; the
//! offspring counts not given are derived from `pop_size`. Penalty keys
//! not given take the problem's own defaults. Relative paths resolve against
//! the working directory.

use std::path::{Path, PathBuf};

use pcia::{PciaConfig, PenaltyConfig};
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

pub const DEFAULT_REPEATS: usize = 30;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StdEstimator {
    /// Divide by `n`.
    #[default]
    Population,
    /// Divide by `n - 1`.
    Sample,
}

/// Optional overrides on top of [`PciaConfig::for_population`].
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PciaOverrides {
    pub pop_size: Option<usize>,
    pub max_iters: Option<usize>,
    pub n_refined: Option<usize>,
    pub n_mutant: Option<usize>,
    pub n_smoothed: Option<usize>,
    pub sim_threshold: Option<f64>,
    pub cosine_threshold: Option<f64>,
    pub n_crossover_pairs: Option<usize>,
    pub n_mutations: Option<usize>,
    pub n_chaos: Option<usize>,
    pub sigma_fraction: Option<f64>,
    pub chaos_alter_prob: Option<f64>,
    pub smooth_fd_step: Option<f64>,
    pub smooth_clamp: Option<f64>,
    pub restart_window: Option<usize>,
    pub restart_threshold: Option<f64>,
}

impl PciaOverrides {
    pub fn resolve(&self) -> PciaConfig {
        let mut c = PciaConfig::for_population(self.pop_size.unwrap_or(120));
        macro_rules! set {
            ($($field:ident),*) => {
                $(if let Some(v) = self.$field { c.$field = v; })*
            };
        }
        set!(
            max_iters,
            n_refined,
            n_mutant,
            n_smoothed,
            sim_threshold,
            cosine_threshold,
            n_crossover_pairs,
            n_mutations,
            n_chaos,
            sigma_fraction,
            chaos_alter_prob,
            smooth_fd_step,
            smooth_clamp,
            restart_window,
            restart_threshold
        );
        c
    }
}

/// Optional overrides on top of [`pcia::ConstrainedProblem::default_penalty`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PenaltyOverrides {
    pub alpha: Option<u32>,
    pub pc: Option<f64>,
    pub eq_tolerance: Option<f64>,
}

impl PenaltyOverrides {
    pub fn resolve(&self, defaults: PenaltyConfig) -> PenaltyConfig {
        PenaltyConfig {
            alpha: self.alpha.unwrap_or(defaults.alpha),
            pc: self.pc.unwrap_or(defaults.pc),
            eq_tolerance: self.eq_tolerance.unwrap_or(defaults.eq_tolerance),
        }
    }
}

/// Shift, rotation and bias applied to an F problem; missing parts default
/// to the identity.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformConfig {
    pub rotation: Option<PathBuf>,
    pub shift: Option<PathBuf>,
    #[serde(default)]
    pub bias: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    /// Report CSV, appended to.
    pub report: Option<PathBuf>,
    /// Per-run CSV, overwritten.
    pub runs: Option<PathBuf>,
    /// Directory receiving one trace CSV per repeat.
    pub trace_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    /// `F1`..`F23` or `G1`..`G13`.
    pub problem: String,
    /// Dimension of a scalable F problem; defaults to the problem's own.
    pub dim: Option<usize>,
    pub repeats: usize,
    /// Repeat `r` runs with seed `base_seed + r`.
    pub base_seed: u64,
    pub std: StdEstimator,
    pub pcia: PciaOverrides,
    /// Used by G problems only.
    pub penalty: PenaltyOverrides,
    pub transform: Option<TransformConfig>,
    pub output: OutputConfig,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            problem: String::new(),
            dim: None,
            repeats: DEFAULT_REPEATS,
            base_seed: 0,
            std: StdEstimator::default(),
            pcia: PciaOverrides::default(),
            penalty: PenaltyOverrides::default(),
            transform: None,
            output: OutputConfig::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn new(problem: impl Into<String>) -> Self {
        Self {
            problem: problem.into(),
            ..Self::default()
        }
    }

    pub fn from_toml_str(text: &str, origin: &Path) -> Result<Self> {
        toml::from_str(text).map_err(|source| HarnessError::ConfigParse {
            path: origin.to_path_buf(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| HarnessError::ConfigRead {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml_str(&text, path)
    }

    /// The engine configuration of repeat `r`.
    pub fn pcia_for_repeat(&self, r: usize) -> PciaConfig {
        let mut c = self.pcia.resolve();
        c.seed = self.base_seed + r as u64;
        c
    }

    /// Checks that need no file access.
    pub fn validate(&self) -> Result<()> {
        if self.problem.trim().is_empty() {
            return Err(HarnessError::Config("problem name is empty".into()));
        }
        if self.repeats == 0 {
            return Err(HarnessError::Config("repeats must be positive".into()));
        }
        if self
            .base_seed
            .checked_add(self.repeats as u64 - 1)
            .is_none()
        {
            return Err(HarnessError::Config(format!(
                "base_seed {} overflows over {} repeats",
                self.base_seed, self.repeats
            )));
        }
        self.pcia
            .resolve()
            .validate()
            .map_err(HarnessError::Problem)?;
        self.penalty
            .resolve(PenaltyConfig::default())
            .validate()
            .map_err(HarnessError::Problem)?;
        if let Some(t) = &self.transform {
            if !t.bias.is_finite() {
                return Err(HarnessError::Config(format!(
                    "bias must be finite, got {}",
                    t.bias
                )));
            }
        }
        Ok(())
    }
}
