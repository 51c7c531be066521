use serde::{Deserialize, Serialize};

use crate::error::{PciaError, Result};

/// Axis-aligned box `[lower[i], upper[i]]` the decision variables live in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(PciaError::InvalidSpace(
                "dimension must be at least 1".into(),
            ));
        }
        if lower.len() != upper.len() {
            return Err(PciaError::DimensionMismatch {
                expected: lower.len(),
                actual: upper.len(),
            });
        }
        for (i, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(PciaError::InvalidSpace(format!(
                    "bounds [{lo}, {hi}] of dimension {i} are not an ordered finite interval"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval repeated in every dimension.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// `upper[i] - lower[i]`.
    pub fn width(&self, i: usize) -> f64 {
        self.upper[i] - self.lower[i]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| *v >= *lo && *v <= *hi)
    }

    pub(crate) fn check_dim(&self, len: usize) -> Result<()> {
        if len == self.dim() {
            Ok(())
        } else {
            Err(PciaError::DimensionMismatch {
                expected: self.dim(),
                actual: len,
            })
        }
    }
}
