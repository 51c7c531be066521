//! Exterior penalty reformulation.
//!
//! Each inequality contributes `max(0, g_i(x))^alpha` and each equality
//! `|h_j(x)|^alpha`; the penalized objective adds `pc` times their sum to
//! the objective in minimization form. Equalities are judged feasible within
//! `eq_tolerance` when reporting, but are penalized without tolerance.

use serde::{Deserialize, Serialize};

use super::problems::{ConstrainedProblem, ConstraintValues};
use crate::error::{PciaError, Result};
use crate::objective::Objective;
use crate::rng::Draws;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PenaltyConfig {
    /// Exponent of every penalty term, 1 or 2.
    pub alpha: u32,
    /// Penalty coefficient.
    pub pc: f64,
    /// Equalities with `|h| <= eq_tolerance` count as satisfied when reporting.
    pub eq_tolerance: f64,
}

impl Default for PenaltyConfig {
    fn default() -> Self {
        Self {
            alpha: 2,
            pc: 1e6,
            eq_tolerance: 1e-4,
        }
    }
}

impl PenaltyConfig {
    pub fn validate(&self) -> Result<()> {
        if !matches!(self.alpha, 1 | 2) {
            return Err(PciaError::InvalidConfig(format!(
                "penalty alpha must be 1 or 2, got {}",
                self.alpha
            )));
        }
        if !(self.pc > 0.0 && self.pc.is_finite()) {
            return Err(PciaError::InvalidConfig(format!(
                "penalty coefficient must be positive, got {}",
                self.pc
            )));
        }
        if !(self.eq_tolerance > 0.0 && self.eq_tolerance.is_finite()) {
            return Err(PciaError::InvalidConfig(format!(
                "equality tolerance must be positive, got {}",
                self.eq_tolerance
            )));
        }
        Ok(())
    }
}

/// Penalty terms of already computed constraint values, inequalities first.
pub fn terms_of(values: &ConstraintValues, alpha: u32) -> Vec<f64> {
    let pow = |v: f64| if alpha == 1 { v } else { v.powi(alpha as i32) };
    values
        .g
        .iter()
        .map(|g| pow(g.max(0.0)))
        .chain(values.h.iter().map(|h| pow(h.abs())))
        .collect()
}

/// One non-negative term per constraint at `x`.
pub fn penalty_terms(problem: &ConstrainedProblem, x: &[f64], alpha: u32) -> Result<Vec<f64>> {
    if !matches!(alpha, 1 | 2) {
        return Err(PciaError::InvalidConfig(format!(
            "penalty alpha must be 1 or 2, got {alpha}"
        )));
    }
    Ok(terms_of(&problem.eval(x)?, alpha))
}

/// Largest constraint violation at `x`; zero iff `x` is feasible, with
/// equalities allowed `eq_tolerance` of slack.
pub fn max_violation(problem: &ConstrainedProblem, x: &[f64], eq_tolerance: f64) -> Result<f64> {
    Ok(violation_of(&problem.eval(x)?, eq_tolerance))
}

pub fn violation_of(values: &ConstraintValues, eq_tolerance: f64) -> f64 {
    values
        .g
        .iter()
        .map(|g| g.max(0.0))
        .chain(values.h.iter().map(|h| (h.abs() - eq_tolerance).max(0.0)))
        .fold(0.0, f64::max)
}

/// Unconstrained objective `sense(f) + pc * sum(penalty_terms)`.
#[derive(Debug, Clone)]
pub struct PenalizedObjective {
    problem: ConstrainedProblem,
    config: PenaltyConfig,
}

pub fn penalized_objective(
    problem: &ConstrainedProblem,
    config: &PenaltyConfig,
) -> Result<PenalizedObjective> {
    config.validate()?;
    Ok(PenalizedObjective {
        problem: problem.clone(),
        config: *config,
    })
}

impl PenalizedObjective {
    pub fn problem(&self) -> &ConstrainedProblem {
        &self.problem
    }

    pub fn config(&self) -> &PenaltyConfig {
        &self.config
    }

    pub fn value(&self, x: &[f64]) -> Result<f64> {
        let v = self.problem.eval(x)?;
        Ok(self.compose(&v))
    }

    fn compose(&self, v: &ConstraintValues) -> f64 {
        let penalty: f64 = terms_of(v, self.config.alpha).iter().sum();
        self.problem.sense().flip(v.f) + self.config.pc * penalty
    }
}

impl Objective for PenalizedObjective {
    fn dim(&self) -> usize {
        self.problem.dim()
    }

    fn evaluate(&self, x: &[f64], _noise: &mut dyn Draws) -> f64 {
        self.compose(&self.problem.eval_unchecked(x))
    }
}
