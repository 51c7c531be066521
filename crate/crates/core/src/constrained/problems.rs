//! The G1-G13 constrained test problems.
//!
//! Inequalities are feasible when `g(x) <= 0`, equalities when `h(x) = 0`.
//! G2, G3 and G8 are maximization problems; G12 is posed as minimizing the
//! negated objective, so its optimum is -1.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use super::penalty::PenaltyConfig;
use crate::error::{PciaError, Result};
use crate::space::SearchSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

impl Sense {
    /// Map a value between the original sense and the minimized form; the
    /// map is its own inverse.
    pub fn flip(self, value: f64) -> f64 {
        match self {
            Sense::Minimize => value,
            Sense::Maximize => -value,
        }
    }
}

/// Raw objective and constraint values at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintValues {
    pub f: f64,
    pub g: Vec<f64>,
    pub h: Vec<f64>,
}

/// A box-bounded problem with inequality and equality constraints.
#[derive(Debug, Clone)]
pub struct ConstrainedProblem {
    name: &'static str,
    space: SearchSpace,
    sense: Sense,
    best_known: f64,
    best_point: Vec<f64>,
    eval: fn(&[f64]) -> ConstraintValues,
}

impl ConstrainedProblem {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    /// Best known objective value, in the problem's own sense.
    pub fn best_known(&self) -> f64 {
        self.best_known
    }

    /// A feasible point attaining (to about 1e-9 relative) the best known value.
    pub fn best_point(&self) -> &[f64] {
        &self.best_point
    }

    pub fn eval(&self, x: &[f64]) -> Result<ConstraintValues> {
        self.space.check_dim(x.len())?;
        Ok((self.eval)(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &[f64]) -> ConstraintValues {
        (self.eval)(x)
    }

    /// Penalty settings for this problem: the shared defaults with exponent 2
    /// for G3, G11 and G13 and exponent 1 elsewhere.
    pub fn default_penalty(&self) -> PenaltyConfig {
        let alpha = match self.name {
            "G3" | "G11" | "G13" => 2,
            _ => 1,
        };
        PenaltyConfig {
            alpha,
            ..PenaltyConfig::default()
        }
    }

    /// `(number of inequalities, number of equalities)`.
    pub fn constraint_counts(&self) -> (usize, usize) {
        let v = (self.eval)(&self.best_point);
        (v.g.len(), v.h.len())
    }
}

fn g1(x: &[f64]) -> ConstraintValues {
    let f = 5.0 * x[..4].iter().sum::<f64>()
        - 5.0 * x[..4].iter().map(|v| v * v).sum::<f64>()
        - x[4..].iter().sum::<f64>();
    let g = vec![
        2.0 * x[0] + 2.0 * x[1] + x[9] + x[10] - 10.0,
        2.0 * x[0] + 2.0 * x[2] + x[9] + x[11] - 10.0,
        2.0 * x[1] + 2.0 * x[2] + x[10] + x[11] - 10.0,
        -8.0 * x[0] + x[9],
        -8.0 * x[1] + x[10],
        -8.0 * x[2] + x[11],
        -2.0 * x[3] - x[4] + x[9],
        -2.0 * x[5] - x[6] + x[10],
        -2.0 * x[7] - x[8] + x[11],
    ];
    ConstraintValues { f, g, h: vec![] }
}

fn g2(x: &[f64]) -> ConstraintValues {
    let n = x.len() as f64;
    let sum4: f64 = x.iter().map(|v| v.cos().powi(4)).sum();
    let prod2: f64 = x.iter().map(|v| v.cos().powi(2)).product();
    let weighted: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v * v)
        .sum();
    let f = (sum4 - 2.0 * prod2).abs() / weighted.sqrt();
    let g = vec![
        0.75 - x.iter().product::<f64>(),
        x.iter().sum::<f64>() - 7.5 * n,
    ];
    ConstraintValues { f, g, h: vec![] }
}

fn g3(x: &[f64]) -> ConstraintValues {
    let n = x.len() as f64;
    let f = n.sqrt().powi(x.len() as i32) * x.iter().product::<f64>();
    let h = vec![x.iter().map(|v| v * v).sum::<f64>() - 1.0];
    ConstraintValues { f, g: vec![], h }
}

fn g4(x: &[f64]) -> ConstraintValues {
    let f = 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141;
    let u = 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4];
    let v = 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2];
    let w = 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3];
    let g = vec![u - 92.0, -u, v - 110.0, 90.0 - v, w - 25.0, 20.0 - w];
    ConstraintValues { f, g, h: vec![] }
}

fn g5(x: &[f64]) -> ConstraintValues {
    let f = 3.0 * x[0] + 1e-6 * x[0].powi(3) + 2.0 * x[1] + (2e-6 / 3.0) * x[1].powi(3);
    let g = vec![-x[3] + x[2] - 0.55, -x[2] + x[3] - 0.55];
    let h = vec![
        1000.0 * (-x[2] - 0.25).sin() + 1000.0 * (-x[3] - 0.25).sin() + 894.8 - x[0],
        1000.0 * (x[2] - 0.25).sin() + 1000.0 * (x[2] - x[3] - 0.25).sin() + 894.8 - x[1],
        1000.0 * (x[3] - 0.25).sin() + 1000.0 * (x[3] - x[2] - 0.25).sin() + 1294.8,
    ];
    ConstraintValues { f, g, h }
}

fn g6(x: &[f64]) -> ConstraintValues {
    let f = (x[0] - 10.0).powi(3) + (x[1] - 20.0).powi(3);
    let g = vec![
        -(x[0] - 5.0).powi(2) - (x[1] - 5.0).powi(2) + 100.0,
        (x[0] - 6.0).powi(2) + (x[1] - 5.0).powi(2) - 82.81,
    ];
    ConstraintValues { f, g, h: vec![] }
}

fn g7(x: &[f64]) -> ConstraintValues {
    let f = x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14.0 * x[0] - 16.0 * x[1]
        + (x[2] - 10.0).powi(2)
        + 4.0 * (x[3] - 5.0).powi(2)
        + (x[4] - 3.0).powi(2)
        + 2.0 * (x[5] - 1.0).powi(2)
        + 5.0 * x[6] * x[6]
        + 7.0 * (x[7] - 11.0).powi(2)
        + 2.0 * (x[8] - 10.0).powi(2)
        + (x[9] - 7.0).powi(2)
        + 45.0;
    let g = vec![
        -105.0 + 4.0 * x[0] + 5.0 * x[1] - 3.0 * x[6] + 9.0 * x[7],
        10.0 * x[0] - 8.0 * x[1] - 17.0 * x[6] + 2.0 * x[7],
        -8.0 * x[0] + 2.0 * x[1] + 5.0 * x[8] - 2.0 * x[9] - 12.0,
        3.0 * (x[0] - 2.0).powi(2) + 4.0 * (x[1] - 3.0).powi(2) + 2.0 * x[2] * x[2]
            - 7.0 * x[3]
            - 120.0,
        5.0 * x[0] * x[0] + 8.0 * x[1] + (x[2] - 6.0).powi(2) - 2.0 * x[3] - 40.0,
        x[0] * x[0] + 2.0 * (x[1] - 2.0).powi(2) - 2.0 * x[0] * x[1] + 14.0 * x[4] - 6.0 * x[5],
        0.5 * (x[0] - 8.0).powi(2) + 2.0 * (x[1] - 4.0).powi(2) + 3.0 * x[4] * x[4] - x[5] - 30.0,
        -3.0 * x[0] + 6.0 * x[1] + 12.0 * (x[8] - 8.0).powi(2) - 7.0 * x[9],
    ];
    ConstraintValues { f, g, h: vec![] }
}

fn g8(x: &[f64]) -> ConstraintValues {
    // continuous extension on the x1 = 0 face of the box
    let sinc = |v: f64| {
        if v == 0.0 {
            2.0 * PI
        } else {
            (2.0 * PI * v).sin() / v
        }
    };
    let tail = if x[0] + x[1] == 0.0 {
        2.0 * PI
    } else {
        (2.0 * PI * x[1]).sin() / (x[0] + x[1])
    };
    let f = sinc(x[0]).powi(3) * tail;
    let g = vec![x[0] * x[0] - x[1] + 1.0, 1.0 - x[0] + (x[1] - 4.0).powi(2)];
    ConstraintValues { f, g, h: vec![] }
}

fn g9(x: &[f64]) -> ConstraintValues {
    let f = (x[0] - 10.0).powi(2)
        + 5.0 * (x[1] - 12.0).powi(2)
        + x[2].powi(4)
        + 3.0 * (x[3] - 11.0).powi(2)
        + 10.0 * x[4].powi(6)
        + 7.0 * x[5] * x[5]
        + x[6].powi(4)
        - 4.0 * x[5] * x[6]
        - 10.0 * x[5]
        - 8.0 * x[6];
    let g = vec![
        -127.0 + 2.0 * x[0] * x[0] + 3.0 * x[1].powi(4) + x[2] + 4.0 * x[3] * x[3] + 5.0 * x[4],
        -282.0 + 7.0 * x[0] + 3.0 * x[1] + 10.0 * x[2] * x[2] + x[3] - x[4],
        -196.0 + 23.0 * x[0] + x[1] * x[1] + 6.0 * x[5] * x[5] - 8.0 * x[6],
        4.0 * x[0] * x[0] + x[1] * x[1] - 3.0 * x[0] * x[1] + 2.0 * x[2] * x[2] + 5.0 * x[5]
            - 11.0 * x[6],
    ];
    ConstraintValues { f, g, h: vec![] }
}

fn g10(x: &[f64]) -> ConstraintValues {
    let f = x[0] + x[1] + x[2];
    let g = vec![
        -1.0 + 0.0025 * (x[3] + x[5]),
        -1.0 + 0.0025 * (x[4] + x[6] - x[3]),
        -1.0 + 0.01 * (x[7] - x[4]),
        -x[0] * x[5] + 833.33252 * x[3] + 100.0 * x[0] - 83333.333,
        -x[1] * x[6] + 1250.0 * x[4] + x[1] * x[3] - 1250.0 * x[3],
        -x[2] * x[7] + 1_250_000.0 + x[2] * x[4] - 2500.0 * x[4],
    ];
    ConstraintValues { f, g, h: vec![] }
}

fn g11(x: &[f64]) -> ConstraintValues {
    ConstraintValues {
        f: x[0] * x[0] + (x[1] - 1.0).powi(2),
        g: vec![],
        h: vec![x[1] - x[0] * x[0]],
    }
}

fn g12(x: &[f64]) -> ConstraintValues {
    let f = -(100.0 - (x[0] - 5.0).powi(2) - (x[1] - 5.0).powi(2) - (x[2] - 5.0).powi(2)) / 100.0;
    // feasible inside any of the 9^3 balls of radius 0.25 centred on the integer grid 1..=9
    let nearest: f64 = x
        .iter()
        .map(|v| (v - v.round().clamp(1.0, 9.0)).powi(2))
        .sum();
    ConstraintValues {
        f,
        g: vec![nearest - 0.0625],
        h: vec![],
    }
}

fn g13(x: &[f64]) -> ConstraintValues {
    let f = (x[0] * x[1] * x[2] * x[3] * x[4]).exp();
    let h = vec![
        x.iter().map(|v| v * v).sum::<f64>() - 10.0,
        x[1] * x[2] - 5.0 * x[3] * x[4],
        x[0].powi(3) + x[1].powi(3) + 1.0,
    ];
    ConstraintValues { f, g: vec![], h }
}

pub const PROBLEM_NAMES: [&str; 13] = [
    "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12", "G13",
];

fn problem(
    name: &'static str,
    lower: Vec<f64>,
    upper: Vec<f64>,
    sense: Sense,
    best_known: f64,
    best_point: Vec<f64>,
    eval: fn(&[f64]) -> ConstraintValues,
) -> ConstrainedProblem {
    ConstrainedProblem {
        name,
        space: SearchSpace::new(lower, upper).expect("problem bounds are valid"),
        sense,
        best_known,
        best_point,
        eval,
    }
}

/// Look up `G1`..`G13`.
pub fn lookup_problem(name: &str) -> Result<ConstrainedProblem> {
    use Sense::*;
    let p = match name {
        "G1" => {
            let mut upper = vec![1.0; 13];
            upper[9] = 100.0;
            upper[10] = 100.0;
            upper[11] = 100.0;
            let mut best = vec![1.0; 13];
            best[9] = 3.0;
            best[10] = 3.0;
            best[11] = 3.0;
            problem("G1", vec![0.0; 13], upper, Minimize, -15.0, best, g1)
        }
        "G2" => problem(
            "G2",
            vec![0.0; 20],
            vec![10.0; 20],
            Maximize,
            0.803_619_104_125_587_3,
            vec![
                3.162_460_650_458_188,
                3.128_331_433_446_175,
                3.094_792_130_694_028_5,
                3.061_450_590_516_42,
                3.027_929_181_438_2,
                2.993_826_061_061_018_3,
                2.958_668_709_937_512_6,
                2.921_842_240_308_264,
                0.494_825_137_511_908_3,
                0.488_357_110_394_213_4,
                0.482_316_429_324_696_87,
                0.476_644_726_636_926_86,
                0.471_295_500_222_437_4,
                0.466_231_012_272_098_1,
                0.461_420_048_902_812_1,
                0.456_836_650_481_541_26,
                0.452_458_770_647_548_36,
                0.448_267_619_809_844_1,
                0.444_247_004_713_097_64,
                0.440_382_851_587_201_1,
            ],
            g2,
        ),
        "G3" => problem(
            "G3",
            vec![0.0; 10],
            vec![1.0; 10],
            Maximize,
            1.0,
            vec![1.0 / 10f64.sqrt(); 10],
            g3,
        ),
        "G4" => problem(
            "G4",
            vec![78.0, 33.0, 27.0, 27.0, 27.0],
            vec![102.0, 45.0, 45.0, 45.0, 45.0],
            Minimize,
            -30_665.538_671_783_2,
            vec![78.0, 33.0, 29.995_256_025_682, 45.0, 36.775_812_905_788],
            g4,
        ),
        "G5" => problem(
            "G5",
            vec![0.0, 0.0, -0.55, -0.55],
            vec![1200.0, 1200.0, 0.55, 0.55],
            Minimize,
            5_126.498_109_595_282,
            vec![
                679.945_365_042_493_6,
                1_026.067_084_322_326_5,
                0.118_876_332_266_918_96,
                -0.396_233_568_499_321_84,
            ],
            g5,
        ),
        "G6" => problem(
            "G6",
            vec![13.0, 0.0],
            vec![100.0, 100.0],
            Minimize,
            -6_961.813_875_580_138,
            vec![14.095_000_000_999_992, 0.842_960_791_283_038_7],
            g6,
        ),
        "G7" => problem(
            "G7",
            vec![-10.0; 10],
            vec![10.0; 10],
            Minimize,
            24.306_209_068_179_9,
            vec![
                2.171_996_351_284_456_2,
                2.363_683_037_239_215_7,
                8.773_925_671_001_182,
                5.095_984_444_089_868,
                0.990_654_753_878_714_7,
                1.430_573_955_235_393_8,
                1.321_644_167_896_133_3,
                9.828_725_765_389_596,
                8.280_091_581_024_204,
                8.375_926_603_396_643,
            ],
            g7,
        ),
        "G8" => problem(
            "G8",
            vec![0.0; 2],
            vec![10.0; 2],
            Maximize,
            0.095_825_041_138_445_5,
            vec![1.227_971_352_607_526, 4.245_373_366_122_749],
            g8,
        ),
        "G9" => problem(
            "G9",
            vec![-10.0; 7],
            vec![10.0; 7],
            Minimize,
            680.630_057_374_402,
            vec![
                2.330_499_351_952_514,
                1.951_372_368_651_562,
                -0.477_541_400_509_652_7,
                4.365_726_248_655_394,
                -0.624_486_958_952_619_7,
                1.038_130_993_853_774_8,
                1.594_226_678_630_015_2,
            ],
            g9,
        ),
        "G10" => problem(
            "G10",
            vec![100.0, 1000.0, 1000.0, 10.0, 10.0, 10.0, 10.0, 10.0],
            vec![
                10000.0, 10000.0, 10000.0, 1000.0, 1000.0, 1000.0, 1000.0, 1000.0,
            ],
            Minimize,
            7_049.248_020_528_668,
            vec![
                579.306_480_547_732_7,
                1_359.971_223_446_704_5,
                5_109.970_329_001_148_5,
                182.017_682_384_281_5,
                295.601_187_046_665_6,
                217.982_317_209_733_03,
                286.416_494_935_142_7,
                395.601_186_946_081_67,
            ],
            g10,
        ),
        "G11" => problem(
            "G11",
            vec![-1.0; 2],
            vec![1.0; 2],
            Minimize,
            0.75,
            vec![FRAC_1_SQRT_2, 0.5],
            g11,
        ),
        "G12" => problem(
            "G12",
            vec![0.0; 3],
            vec![10.0; 3],
            Minimize,
            -1.0,
            vec![5.0; 3],
            g12,
        ),
        "G13" => problem(
            "G13",
            vec![-2.3, -2.3, -3.2, -3.2, -3.2],
            vec![2.3, 2.3, 3.2, 3.2, 3.2],
            Minimize,
            0.053_949_847_770_272_1,
            vec![
                -1.717_143_566_637_964_4,
                1.595_709_685_833_653_7,
                1.827_245_759_906_900_3,
                -0.763_643_087_472_072_7,
                -0.763_643_069_731_459_6,
            ],
            g13,
        ),
        _ => {
            return Err(PciaError::UnknownProblem {
                name: name.to_string(),
                available: PROBLEM_NAMES.join(", "),
            })
        }
    };
    Ok(p)
}

/// Raw objective and constraint values of a named problem.
pub fn eval_constrained(name: &str, x: &[f64]) -> Result<ConstraintValues> {
    lookup_problem(name)?.eval(x)
}
