use crate::error::{PciaError, Result};
use crate::space::SearchSpace;

/// A candidate solution: a position in the search box plus its cost once
/// evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    position: Vec<f64>,
    cost: f64,
    evaluated: bool,
}

impl Path {
    /// Unevaluated path at `position`.
    pub fn new(position: Vec<f64>) -> Self {
        Self {
            position,
            cost: f64::NAN,
            evaluated: false,
        }
    }

    /// Path with a known finite cost.
    pub fn with_cost(position: Vec<f64>, cost: f64) -> Result<Self> {
        if !cost.is_finite() {
            return Err(PciaError::NonFiniteCost {
                value: cost,
                position,
            });
        }
        Ok(Self {
            position,
            cost,
            evaluated: true,
        })
    }

    pub fn position(&self) -> &[f64] {
        &self.position
    }

    pub fn into_position(self) -> Vec<f64> {
        self.position
    }

    pub fn dim(&self) -> usize {
        self.position.len()
    }

    /// Cost of an evaluated path; `NaN` otherwise.
    pub fn cost(&self) -> f64 {
        self.cost
    }

    pub fn is_evaluated(&self) -> bool {
        self.evaluated
    }

    /// Saturate every coordinate into the box. The evaluated flag survives
    /// only if nothing moved.
    pub fn clip_to_bounds(mut self, space: &SearchSpace) -> Self {
        debug_assert_eq!(self.position.len(), space.dim());
        let mut changed = false;
        for ((x, lo), hi) in self
            .position
            .iter_mut()
            .zip(space.lower())
            .zip(space.upper())
        {
            let clipped = x.max(*lo).min(*hi);
            if clipped != *x {
                *x = clipped;
                changed = true;
            }
        }
        if changed {
            self.evaluated = false;
            self.cost = f64::NAN;
        }
        self
    }
}
