use serde::{Deserialize, Serialize};

use crate::error::{PciaError, Result};

/// Every tunable of a run.
///
/// The per-iteration offspring counts default to fixed fractions of the
/// population size; see [`PciaConfig::for_population`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PciaConfig {
    pub pop_size: usize,
    pub max_iters: usize,
    /// Refined paths per iteration, produced in pairs (must be even).
    pub n_refined: usize,
    pub n_mutant: usize,
    pub n_smoothed: usize,
    /// Element similarity threshold separating "similar" from "different".
    pub sim_threshold: f64,
    /// Crossover only splices pairs whose cosine similarity is below this.
    pub cosine_threshold: f64,
    pub n_crossover_pairs: usize,
    pub n_mutations: usize,
    pub n_chaos: usize,
    /// Mutation step as a fraction of the box width of the mutated dimension.
    pub sigma_fraction: f64,
    /// Per-element selection probability of the chaos operator.
    pub chaos_alter_prob: f64,
    /// Finite-difference step of smoothing, relative to the current range.
    pub smooth_fd_step: f64,
    /// Largest smoothing step, relative to the current range.
    pub smooth_clamp: f64,
    pub restart_window: usize,
    /// Relative improvement below which an iteration counts as stalled.
    pub restart_threshold: f64,
    pub seed: u64,
}

impl Default for PciaConfig {
    fn default() -> Self {
        Self::for_population(120)
    }
}

impl PciaConfig {
    /// Defaults with offspring counts scaled to `m`:
    /// `n_refined = m` (rounded down to even), `n_mutant = m/2`,
    /// `n_smoothed = n_crossover_pairs = n_mutations = m/10`, `n_chaos = m/20`.
    pub fn for_population(m: usize) -> Self {
        Self {
            pop_size: m,
            max_iters: 1000,
            n_refined: m - m % 2,
            n_mutant: m / 2,
            n_smoothed: m / 10,
            sim_threshold: 0.8,
            cosine_threshold: 0.5,
            n_crossover_pairs: m / 10,
            n_mutations: m / 10,
            n_chaos: m / 20,
            sigma_fraction: 0.1,
            chaos_alter_prob: 0.1,
            smooth_fd_step: 1e-3,
            smooth_clamp: 0.5,
            restart_window: 10,
            restart_threshold: 1e-5,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_max_iters(mut self, iters: usize) -> Self {
        self.max_iters = iters;
        self
    }

    /// Objective evaluations spent by one iteration without a restart.
    pub fn evaluations_per_iteration(&self) -> u64 {
        (self.n_refined
            + self.n_mutant
            + 2 * self.n_smoothed
            + 2 * self.n_crossover_pairs
            + self.n_mutations
            + self.n_chaos) as u64
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(PciaError::InvalidConfig(msg));
        if self.pop_size < 4 {
            return fail(format!(
                "pop_size must be at least 4 (mutant paths need four distinct members), got {}",
                self.pop_size
            ));
        }
        if self.n_refined % 2 != 0 {
            return fail(format!("n_refined must be even, got {}", self.n_refined));
        }
        let open_unit = |name: &str, v: f64| -> Result<()> {
            if v > 0.0 && v < 1.0 {
                Ok(())
            } else {
                Err(PciaError::InvalidConfig(format!(
                    "{name} must lie in (0, 1), got {v}"
                )))
            }
        };
        let half_open_unit = |name: &str, v: f64| -> Result<()> {
            if v > 0.0 && v <= 1.0 {
                Ok(())
            } else {
                Err(PciaError::InvalidConfig(format!(
                    "{name} must lie in (0, 1], got {v}"
                )))
            }
        };
        let positive = |name: &str, v: f64| -> Result<()> {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(PciaError::InvalidConfig(format!(
                    "{name} must be positive, got {v}"
                )))
            }
        };
        open_unit("sim_threshold", self.sim_threshold)?;
        if !(self.cosine_threshold > -1.0 && self.cosine_threshold < 1.0) {
            return fail(format!(
                "cosine_threshold must lie in (-1, 1), got {}",
                self.cosine_threshold
            ));
        }
        half_open_unit("sigma_fraction", self.sigma_fraction)?;
        half_open_unit("chaos_alter_prob", self.chaos_alter_prob)?;
        positive("smooth_fd_step", self.smooth_fd_step)?;
        positive("smooth_clamp", self.smooth_clamp)?;
        if self.restart_window == 0 {
            return fail("restart_window must be positive".into());
        }
        if !(self.restart_threshold >= 0.0 && self.restart_threshold.is_finite()) {
            return fail(format!(
                "restart_threshold must be a non-negative number, got {}",
                self.restart_threshold
            ));
        }
        Ok(())
    }
}
