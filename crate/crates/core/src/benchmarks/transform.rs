use super::matrix::Matrix;
use super::BenchmarkDescriptor;
use crate::error::{PciaError, Result};
use crate::objective::Objective;
use crate::rng::Draws;
use crate::space::SearchSpace;

/// `x -> base(R (x - shift)) + bias` over the base function's box.
#[derive(Debug, Clone)]
pub struct TransformedObjective {
    base: BenchmarkDescriptor,
    shift: Vec<f64>,
    rotation: Matrix,
    bias: f64,
}

/// Wrap `base` with a shift, a square rotation and a bias.
pub fn make_transformed(
    base: BenchmarkDescriptor,
    shift: Vec<f64>,
    rotation: Matrix,
    bias: f64,
) -> Result<TransformedObjective> {
    let dim = base.dim();
    if rotation.rows() != rotation.cols() {
        return Err(PciaError::InvalidConfig(format!(
            "rotation must be square, got {}x{}",
            rotation.rows(),
            rotation.cols()
        )));
    }
    if rotation.rows() != dim {
        return Err(PciaError::DimensionMismatch {
            expected: dim,
            actual: rotation.rows(),
        });
    }
    if shift.len() != dim {
        return Err(PciaError::DimensionMismatch {
            expected: dim,
            actual: shift.len(),
        });
    }
    if !bias.is_finite() {
        return Err(PciaError::InvalidConfig(format!(
            "bias must be finite, got {bias}"
        )));
    }
    Ok(TransformedObjective {
        base,
        shift,
        rotation,
        bias,
    })
}

impl TransformedObjective {
    pub fn base(&self) -> &BenchmarkDescriptor {
        &self.base
    }

    pub fn space(&self) -> &SearchSpace {
        self.base.space()
    }

    pub fn bias(&self) -> f64 {
        self.bias
    }

    pub fn shift(&self) -> &[f64] {
        &self.shift
    }

    /// Minimum value when the rotation is orthogonal.
    pub fn f_min(&self) -> f64 {
        self.base.f_min() + self.bias
    }
}

impl Objective for TransformedObjective {
    fn dim(&self) -> usize {
        self.base.dim()
    }

    fn evaluate(&self, x: &[f64], noise: &mut dyn Draws) -> f64 {
        let centered: Vec<f64> = x.iter().zip(&self.shift).map(|(a, o)| a - o).collect();
        let z = self.rotation.apply(&centered);
        self.base.evaluate(&z, noise) + self.bias
    }
}
