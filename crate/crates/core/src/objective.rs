use crate::error::{PciaError, Result};
use crate::path::Path;
use crate::rng::Draws;

/// A function to minimize.
///
/// `noise` is the caller's random stream; deterministic objectives ignore it.
pub trait Objective: Sync {
    fn dim(&self) -> usize;

    fn evaluate(&self, x: &[f64], noise: &mut dyn Draws) -> f64;
}

impl<T: Objective + ?Sized> Objective for &T {
    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn evaluate(&self, x: &[f64], noise: &mut dyn Draws) -> f64 {
        (**self).evaluate(x, noise)
    }
}

/// Adapts a plain closure into an [`Objective`].
pub struct FnObjective<F> {
    dim: usize,
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    pub fn new(dim: usize, f: F) -> Self {
        Self { dim, f }
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn dim(&self) -> usize {
        self.dim
    }

    fn evaluate(&self, x: &[f64], _noise: &mut dyn Draws) -> f64 {
        (self.f)(x)
    }
}

/// Counts every objective call made on behalf of one run.
pub struct Evaluator<'a> {
    objective: &'a dyn Objective,
    count: u64,
}

impl<'a> Evaluator<'a> {
    pub fn new(objective: &'a dyn Objective) -> Self {
        Self {
            objective,
            count: 0,
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Evaluate `path`, failing on a non-finite cost.
    pub fn evaluate(&mut self, path: Path, noise: &mut dyn Draws) -> Result<Path> {
        if path.dim() != self.objective.dim() {
            return Err(PciaError::DimensionMismatch {
                expected: self.objective.dim(),
                actual: path.dim(),
            });
        }
        let cost = self.probe(path.position(), noise);
        Path::with_cost(path.into_position(), cost)
    }

    /// Raw counted call; the caller decides what a non-finite value means.
    pub fn probe(&mut self, x: &[f64], noise: &mut dyn Draws) -> f64 {
        self.count += 1;
        self.objective.evaluate(x, noise)
    }
}
