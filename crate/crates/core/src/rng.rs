//! Random draws used by the optimizer.
//!
//! Every stochastic choice in a run goes through the [`Draws`] trait. The
//! production source is [`RngStream`], a ChaCha8 generator (rand_chacha 0.9)
//! seeded from a `u64`; identical seeds give identical draw sequences on every
//! platform. [`FixedDraws`] replays constant values and is used to pin
//! stochastic terms, for example the noise term of F7.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Source of the primitive random quantities the operators consume.
pub trait Draws {
    /// Uniform on `[0, 1)`.
    fn unit(&mut self) -> f64;
    /// Uniform on the open interval `(0, 1)`.
    fn unit_open(&mut self) -> f64;
    /// Uniform on `[-1, 1]`.
    fn symmetric(&mut self) -> f64;
    /// Standard normal.
    fn standard_normal(&mut self) -> f64;
    /// Uniform index in `0..n`. `n` must be positive.
    fn index(&mut self, n: usize) -> usize;
    /// `true` with probability `p`.
    fn bernoulli(&mut self, p: f64) -> bool;
    /// `+1.0` or `-1.0` with equal probability.
    fn sign(&mut self) -> f64;
}

/// Deterministic per-run random stream.
#[derive(Debug, Clone)]
pub struct RngStream {
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Draws for RngStream {
    fn unit(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    fn unit_open(&mut self) -> f64 {
        loop {
            let u = self.inner.random::<f64>();
            if u > 0.0 {
                return u;
            }
        }
    }

    fn symmetric(&mut self) -> f64 {
        self.inner.random_range(-1.0..=1.0)
    }

    fn standard_normal(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }

    fn index(&mut self, n: usize) -> usize {
        self.inner.random_range(0..n)
    }

    fn bernoulli(&mut self, p: f64) -> bool {
        self.inner.random::<f64>() < p
    }

    fn sign(&mut self) -> f64 {
        if self.inner.random::<bool>() {
            1.0
        } else {
            -1.0
        }
    }
}

/// Draw source returning the same configured value for each kind of draw.
///
/// `index` returns `index % n` and `bernoulli` compares `unit` against `p`,
/// so `unit = 1.0` means "never selected".
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedDraws {
    pub unit: f64,
    pub symmetric: f64,
    pub normal: f64,
    pub index: usize,
    pub sign: f64,
}

impl Default for FixedDraws {
    fn default() -> Self {
        Self {
            unit: 0.0,
            symmetric: 0.0,
            normal: 0.0,
            index: 0,
            sign: 1.0,
        }
    }
}

impl FixedDraws {
    /// Zero noise for stochastic objectives.
    pub fn zero() -> Self {
        Self::default()
    }
}

impl Draws for FixedDraws {
    fn unit(&mut self) -> f64 {
        self.unit
    }

    fn unit_open(&mut self) -> f64 {
        self.unit
    }

    fn symmetric(&mut self) -> f64 {
        self.symmetric
    }

    fn standard_normal(&mut self) -> f64 {
        self.normal
    }

    fn index(&mut self, n: usize) -> usize {
        self.index % n
    }

    fn bernoulli(&mut self, p: f64) -> bool {
        self.unit < p
    }

    fn sign(&mut self) -> f64 {
        self.sign
    }
}
