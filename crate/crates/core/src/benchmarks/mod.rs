//! Benchmark registry (F1-F23), shift/rotate wrapper and matrix loader.

pub mod functions;
mod matrix;
mod transform;

pub use matrix::{load_matrix, load_vector, Matrix};
pub use transform::{make_transformed, TransformedObjective};

use crate::error::{PciaError, Result};
use crate::objective::Objective;
use crate::rng::Draws;
use crate::space::SearchSpace;
use functions as f;

/// One of the F1-F23 test functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Benchmark {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
    F20,
    F21,
    F22,
    F23,
}

impl Benchmark {
    pub const ALL: [Benchmark; 23] = [
        Self::F1,
        Self::F2,
        Self::F3,
        Self::F4,
        Self::F5,
        Self::F6,
        Self::F7,
        Self::F8,
        Self::F9,
        Self::F10,
        Self::F11,
        Self::F12,
        Self::F13,
        Self::F14,
        Self::F15,
        Self::F16,
        Self::F17,
        Self::F18,
        Self::F19,
        Self::F20,
        Self::F21,
        Self::F22,
        Self::F23,
    ];

    pub fn name(self) -> &'static str {
        const NAMES: [&str; 23] = [
            "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9", "F10", "F11", "F12", "F13",
            "F14", "F15", "F16", "F17", "F18", "F19", "F20", "F21", "F22", "F23",
        ];
        NAMES[self as usize]
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.name() == name)
    }

    /// F1-F13 accept any dimension; F14-F23 have a fixed one.
    pub fn is_scalable(self) -> bool {
        (self as usize) < 13
    }

    pub fn default_dim(self) -> usize {
        use Benchmark::*;
        match self {
            F14 | F16 | F17 | F18 => 2,
            F19 => 3,
            F15 | F21 | F22 | F23 => 4,
            F20 => 6,
            _ => 30,
        }
    }

    fn min_dim(self) -> usize {
        match self {
            Self::F5 => 2,
            _ => 1,
        }
    }

    /// Per-dimension bounds.
    pub fn bounds(self) -> (f64, f64) {
        use Benchmark::*;
        match self {
            F1 | F3 | F4 | F6 => (-100.0, 100.0),
            F2 => (-10.0, 10.0),
            F5 => (-30.0, 30.0),
            F7 => (-1.28, 1.28),
            F8 => (-500.0, 500.0),
            F9 => (-5.12, 5.12),
            F10 => (-32.0, 32.0),
            F11 => (-600.0, 600.0),
            F12 | F13 => (-50.0, 50.0),
            F14 => (-65.0, 65.0),
            F15 | F16 | F17 => (-5.0, 5.0),
            F18 => (-2.0, 2.0),
            // The Hartmann 3-D minimum lies in the unit cube.
            F19 => (0.0, 1.0),
            F20 => (0.0, 1.0),
            F21 | F22 | F23 => (0.0, 10.0),
        }
    }

    /// Tabulated global minimum for dimension `dim`.
    pub fn f_min(self, dim: usize) -> f64 {
        use Benchmark::*;
        match self {
            F8 => -418.9829 * dim as f64,
            F14 => 1.0,
            F15 => 0.00030,
            F16 => -1.0316,
            F17 => 0.398,
            F18 => 3.0,
            F19 => -3.86,
            F20 => -3.32,
            F21 => -10.1532,
            F22 => -10.4029,
            F23 => -10.5364,
            _ => 0.0,
        }
    }

    /// A known minimizer for dimension `dim`.
    pub fn optimum(self, dim: usize) -> Vec<f64> {
        use Benchmark::*;
        match self {
            F5 | F13 => vec![1.0; dim],
            F8 => vec![420.968_746; dim],
            F12 => vec![-1.0; dim],
            F14 => vec![-31.978_333_377_976_48, -31.978_334_007_870_856],
            F15 => vec![
                0.192_833_453_081_292_74,
                0.190_836_239_990_794_9,
                0.123_117_299_277_168_3,
                0.135_765_990_269_031_94,
            ],
            F16 => vec![0.089_842_019_033_568_25, -0.712_656_404_235_254_7],
            F17 => vec![std::f64::consts::PI, 2.275],
            F18 => vec![0.0, -1.0],
            F19 => vec![
                0.114_614_342_030_829_51,
                0.555_648_850_790_538_4,
                0.852_546_953_846_025_1,
            ],
            F20 => vec![
                0.201_689_510_377_171_56,
                0.150_010_691_466_166,
                0.476_873_973_371_602_5,
                0.275_332_428_854_481_95,
                0.311_651_616_562_825_6,
                0.657_300_530_846_020_4,
            ],
            F21 => vec![
                4.000_037_152_376_549,
                4.000_133_278_657_566,
                4.000_037_151_057_555,
                4.000_133_277_090_425,
            ],
            F22 => vec![
                4.000_572_914_277_084,
                4.000_689_366_040_889,
                3.999_489_710_793_844_7,
                3.999_606_160_006_792_3,
            ],
            F23 => vec![
                4.000_746_533_201_553,
                4.000_592_934_538_832,
                3.999_663_397_220_255_8,
                3.999_509_801_285_225_5,
            ],
            _ => vec![0.0; dim],
        }
    }

    /// Evaluate at `x`. Only F7 consumes `noise` (one uniform draw).
    pub fn eval(self, x: &[f64], noise: &mut dyn Draws) -> f64 {
        use Benchmark::*;
        match self {
            F1 => f::sphere(x),
            F2 => f::schwefel_2_22(x),
            F3 => f::schwefel_1_2(x),
            F4 => f::schwefel_2_21(x),
            F5 => f::rosenbrock(x),
            F6 => f::step(x),
            F7 => f::quartic_noise(x, noise.unit()),
            F8 => f::schwefel_2_26(x),
            F9 => f::rastrigin(x),
            F10 => f::ackley(x),
            F11 => f::griewank(x),
            F12 => f::penalized_1(x),
            F13 => f::penalized_2(x),
            F14 => f::shekel_foxholes(x),
            F15 => f::kowalik(x),
            F16 => f::six_hump_camel(x),
            F17 => f::branin(x),
            F18 => f::goldstein_price(x),
            F19 => f::hartmann3(x),
            F20 => f::hartmann6(x),
            F21 => f::shekel(x, 5),
            F22 => f::shekel(x, 7),
            F23 => f::shekel(x, 10),
        }
    }
}

/// A benchmark bound to a dimension and its search box.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkDescriptor {
    benchmark: Benchmark,
    space: SearchSpace,
}

impl BenchmarkDescriptor {
    pub fn new(benchmark: Benchmark) -> Self {
        let (lo, hi) = benchmark.bounds();
        let space = SearchSpace::uniform(benchmark.default_dim(), lo, hi)
            .expect("benchmark bounds are valid");
        Self { benchmark, space }
    }

    /// Same function in another dimension. Only F1-F13 can be resized.
    pub fn with_dim(self, dim: usize) -> Result<Self> {
        let b = self.benchmark;
        if dim == b.default_dim() {
            return Ok(self);
        }
        if !b.is_scalable() || dim < b.min_dim() {
            return Err(PciaError::InvalidConfig(format!(
                "{} cannot be evaluated in dimension {dim}",
                b.name()
            )));
        }
        let (lo, hi) = b.bounds();
        Ok(Self {
            benchmark: b,
            space: SearchSpace::uniform(dim, lo, hi)?,
        })
    }

    pub fn benchmark(&self) -> Benchmark {
        self.benchmark
    }

    pub fn name(&self) -> &'static str {
        self.benchmark.name()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn f_min(&self) -> f64 {
        self.benchmark.f_min(self.dim())
    }

    pub fn optimum(&self) -> Vec<f64> {
        self.benchmark.optimum(self.dim())
    }

    pub fn eval(&self, x: &[f64], noise: &mut dyn Draws) -> Result<f64> {
        self.space.check_dim(x.len())?;
        Ok(self.benchmark.eval(x, noise))
    }
}

impl Objective for BenchmarkDescriptor {
    fn dim(&self) -> usize {
        self.space.dim()
    }

    fn evaluate(&self, x: &[f64], noise: &mut dyn Draws) -> f64 {
        self.benchmark.eval(x, noise)
    }
}

fn available() -> String {
    Benchmark::ALL.map(Benchmark::name).join(", ")
}

/// Descriptor for `F1`..`F23` at its default dimension.
pub fn lookup_function(name: &str) -> Result<BenchmarkDescriptor> {
    Benchmark::from_name(name)
        .map(BenchmarkDescriptor::new)
        .ok_or_else(|| PciaError::UnknownProblem {
            name: name.to_string(),
            available: available(),
        })
}

/// Evaluate the named benchmark at `x`, whose length picks the dimension
/// for F1-F13.
pub fn eval_benchmark(name: &str, x: &[f64], noise: &mut dyn Draws) -> Result<f64> {
    let d = lookup_function(name)?;
    let d = if d.benchmark().is_scalable() && x.len() >= d.benchmark().min_dim() {
        d.with_dim(x.len())?
    } else {
        d
    };
    d.eval(x, noise)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{FixedDraws, RngStream};
    use approx::assert_abs_diff_eq;

    /// Full-precision minima from the literature; the tabulated values are
    /// these rounded.
    fn precise_min(b: Benchmark, dim: usize) -> f64 {
        use Benchmark::*;
        match b {
            F8 => -418.982_887_272_433_8 * dim as f64,
            F14 => 0.998_003_837_794_449_8,
            F15 => 3.074_859_878_056e-4,
            F16 => -1.031_628_453_489_877_6,
            F17 => 0.397_887_357_729_738_2,
            F19 => -3.862_782_147_820_755,
            F20 => -3.322_368_011_415_515,
            F21 => -10.153_199_679_058_23,
            F22 => -10.402_940_566_818_66,
            F23 => -10.536_409_816_692_05,
            other => other.f_min(dim),
        }
    }

    #[test]
    fn lookup_examples() {
        let f1 = lookup_function("F1").unwrap();
        assert_eq!((f1.dim(), f1.f_min()), (30, 0.0));
        assert_eq!(f1.space().lower()[0], -100.0);
        assert_eq!(f1.space().upper()[29], 100.0);

        let f16 = lookup_function("F16").unwrap();
        assert_eq!((f16.dim(), f16.f_min()), (2, -1.0316));
        assert_eq!(
            (f16.space().lower()[0], f16.space().upper()[0]),
            (-5.0, 5.0)
        );

        let f8 = lookup_function("F8").unwrap();
        assert_eq!(f8.f_min(), -418.9829 * 30.0);
        assert_eq!(f8.space().upper()[0], 500.0);
    }

    #[test]
    fn unknown_name_lists_choices() {
        let err = lookup_function("F99").unwrap_err().to_string();
        assert!(err.contains("F99") && err.contains("F1, F2") && err.contains("F23"));
    }

    #[test]
    fn catalogued_optima_reach_known_minima() {
        for b in Benchmark::ALL {
            let d = BenchmarkDescriptor::new(b);
            let x = d.optimum();
            assert!(
                d.space().contains(&x),
                "{} optimum outside its box",
                b.name()
            );
            let v = d.eval(&x, &mut FixedDraws::zero()).unwrap();
            let want = precise_min(b, d.dim());
            let tol = if b == Benchmark::F8 { 1e-3 } else { 1e-9 };
            assert_abs_diff_eq!(v, want, epsilon = tol);
        }
    }

    #[test]
    fn tabulated_minima_are_roundings() {
        // the tables print F14..F20 with 3-4 significant digits
        let digits = [
            (Benchmark::F14, 0),
            (Benchmark::F17, 3),
            (Benchmark::F19, 2),
            (Benchmark::F20, 2),
        ];
        for (b, places) in digits {
            let scale = 10f64.powi(places);
            assert_eq!(
                (precise_min(b, b.default_dim()) * scale).round() / scale,
                b.f_min(b.default_dim())
            );
        }
    }

    #[test]
    fn worked_values() {
        let mut z = FixedDraws::zero();
        assert_eq!(eval_benchmark("F1", &[0.0; 30], &mut z).unwrap(), 0.0);
        assert_eq!(eval_benchmark("F1", &[1.0; 30], &mut z).unwrap(), 30.0);
        assert_abs_diff_eq!(
            eval_benchmark("F10", &[0.0; 30], &mut z).unwrap(),
            0.0,
            epsilon = 1e-14
        );
        assert_eq!(eval_benchmark("F11", &[0.0; 30], &mut z).unwrap(), 0.0);
        assert_abs_diff_eq!(
            eval_benchmark("F16", &[0.08984, -0.7126], &mut z).unwrap(),
            -1.0316,
            epsilon = 1e-4
        );
        assert_abs_diff_eq!(
            eval_benchmark("F8", &[420.9687; 30], &mut z).unwrap(),
            -418.9829 * 30.0,
            epsilon = 0.1
        );
    }

    #[test]
    fn wrong_dimension_rejected() {
        let mut z = FixedDraws::zero();
        assert!(eval_benchmark("F16", &[0.0; 3], &mut z).is_err());
        assert!(lookup_function("F16").unwrap().with_dim(3).is_err());
        assert!(lookup_function("F5").unwrap().with_dim(1).is_err());
        assert_eq!(lookup_function("F9").unwrap().with_dim(5).unwrap().dim(), 5);
    }

    #[test]
    fn f7_noise_comes_from_caller() {
        let d = lookup_function("F7").unwrap();
        let x = vec![0.0; 30];
        let mut half = FixedDraws {
            unit: 0.5,
            ..FixedDraws::default()
        };
        assert_eq!(d.eval(&x, &mut half).unwrap(), 0.5);
        let mut a = RngStream::new(5);
        let mut b = RngStream::new(5);
        assert_eq!(d.eval(&x, &mut a).unwrap(), d.eval(&x, &mut b).unwrap());
    }

    #[test]
    fn lower_bound_on_random_points() {
        use Benchmark::*;
        let mut rng = RngStream::new(11);
        for b in [F1, F2, F3, F4, F5, F6, F9, F10, F11, F12, F13] {
            let d = BenchmarkDescriptor::new(b);
            let (lo, hi) = b.bounds();
            for _ in 0..10_000 {
                let x: Vec<f64> = (0..d.dim()).map(|_| lo + rng.unit() * (hi - lo)).collect();
                let v = d.eval(&x, &mut FixedDraws::zero()).unwrap();
                assert!(v >= d.f_min(), "{} = {v} at {x:?}", b.name());
            }
        }
    }

    #[test]
    fn evaluation_is_deterministic() {
        let mut rng = RngStream::new(12);
        for b in Benchmark::ALL.into_iter().filter(|b| *b != Benchmark::F7) {
            let d = BenchmarkDescriptor::new(b);
            let (lo, hi) = b.bounds();
            let x: Vec<f64> = (0..d.dim()).map(|_| lo + rng.unit() * (hi - lo)).collect();
            let a = d.eval(&x, &mut RngStream::new(1)).unwrap();
            let c = d.eval(&x, &mut RngStream::new(2)).unwrap();
            assert_eq!(a.to_bits(), c.to_bits());
        }
    }
}
