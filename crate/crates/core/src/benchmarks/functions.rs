//! The classical F1-F23 test functions.
//!
//! F1-F7 are unimodal, F8-F13 multimodal in any dimension, F14-F23 are
//! multimodal with a fixed dimension. F2, F4 and F8 use the absolute-value
//! forms; F12 uses `y_i = 1 + (x_i + 1) / 4`, which puts its minimum at
//! `x = -1`.

use std::f64::consts::{E, PI};

/// F1, sphere.
pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// F2, Schwefel 2.22: `sum |x_i| + prod |x_i|`.
pub fn schwefel_2_22(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

/// F3, Schwefel 1.2: sum of squared prefix sums.
pub fn schwefel_1_2(x: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

/// F4, Schwefel 2.21: `max |x_i|`.
pub fn schwefel_2_21(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// F5, Rosenbrock.
pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

/// F6, step: `sum floor(x_i + 0.5)^2`.
pub fn step(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

/// F7, quartic plus a uniform `[0, 1)` noise term supplied by the caller.
pub fn quartic_noise(x: &[f64], noise: f64) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum::<f64>()
        + noise
}

/// F8, Schwefel 2.26: `sum -x_i sin(sqrt|x_i|)`.
pub fn schwefel_2_26(x: &[f64]) -> f64 {
    x.iter().map(|v| -v * v.abs().sqrt().sin()).sum()
}

/// F9, Rastrigin.
pub fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

/// F10, Ackley.
pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

/// F11, Griewank.
pub fn griewank(x: &[f64]) -> f64 {
    let sum = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

/// Boundary penalty `u(x, a, k, m)` shared by F12 and F13.
pub fn boundary_penalty(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

/// F12, first generalized penalized function.
pub fn penalized_1(x: &[f64]) -> f64 {
    let n = x.len();
    let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
    let mut inner = 10.0 * (PI * y[0]).sin().powi(2);
    for i in 0..n - 1 {
        inner += (y[i] - 1.0).powi(2) * (1.0 + 10.0 * (PI * y[i + 1]).sin().powi(2));
    }
    inner += (y[n - 1] - 1.0).powi(2);
    PI / n as f64 * inner
        + x.iter()
            .map(|v| boundary_penalty(*v, 10.0, 100.0, 4))
            .sum::<f64>()
}

/// F13, second generalized penalized function.
pub fn penalized_2(x: &[f64]) -> f64 {
    let n = x.len();
    let mut inner = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        inner += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    inner += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
    0.1 * inner
        + x.iter()
            .map(|v| boundary_penalty(*v, 5.0, 100.0, 4))
            .sum::<f64>()
}

const FOXHOLE_GRID: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];

/// F14, Shekel's foxholes.
pub fn shekel_foxholes(x: &[f64]) -> f64 {
    let mut sum = 0.0;
    for j in 0..25 {
        let a1 = FOXHOLE_GRID[j % 5];
        let a2 = FOXHOLE_GRID[j / 5];
        sum += 1.0 / ((j + 1) as f64 + (x[0] - a1).powi(6) + (x[1] - a2).powi(6));
    }
    1.0 / (1.0 / 500.0 + sum)
}

const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
const KOWALIK_INV_B: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

/// F15, Kowalik.
pub fn kowalik(x: &[f64]) -> f64 {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_INV_B)
        .map(|(a, inv_b)| {
            let b = 1.0 / inv_b;
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - model).powi(2)
        })
        .sum()
}

/// F16, six-hump camel back.
pub fn six_hump_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
}

/// F17, Branin.
pub fn branin(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0).powi(2)
        + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos()
        + 10.0
}

/// F18, Goldstein-Price.
pub fn goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let p = 1.0
        + (a + b + 1.0).powi(2)
            * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let q = 30.0
        + (2.0 * a - 3.0 * b).powi(2)
            * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    p * q
}

const HARTMANN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

const HARTMANN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMANN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
];

const HARTMANN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMANN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

fn hartmann<const N: usize>(x: &[f64], a: &[[f64; N]; 4], p: &[[f64; N]; 4]) -> f64 {
    -(0..4)
        .map(|i| {
            let d: f64 = (0..N).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            HARTMANN_C[i] * (-d).exp()
        })
        .sum::<f64>()
}

/// F19, Hartmann 3-D.
pub fn hartmann3(x: &[f64]) -> f64 {
    hartmann(x, &HARTMANN3_A, &HARTMANN3_P)
}

/// F20, Hartmann 6-D.
pub fn hartmann6(x: &[f64]) -> f64 {
    hartmann(x, &HARTMANN6_A, &HARTMANN6_P)
}

const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

/// Shekel family with the first `m` terms (F21: 5, F22: 7, F23: 10).
pub fn shekel(x: &[f64], m: usize) -> f64 {
    -(0..m)
        .map(|i| {
            let d: f64 = (0..4).map(|j| (x[j] - SHEKEL_A[i][j]).powi(2)).sum();
            1.0 / (d + SHEKEL_C[i])
        })
        .sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn ackley_and_griewank_vanish_at_origin() {
        assert_abs_diff_eq!(ackley(&[0.0; 30]), 0.0, epsilon = 1e-14);
        assert_eq!(griewank(&[0.0; 30]), 0.0);
    }

    #[test]
    fn hand_values() {
        assert_eq!(sphere(&[1.0; 30]), 30.0);
        assert_eq!(schwefel_2_22(&[-1.0, 2.0]), 3.0 + 2.0);
        assert_eq!(schwefel_1_2(&[1.0, 2.0, 3.0]), 1.0 + 9.0 + 36.0);
        assert_eq!(schwefel_2_21(&[1.0, -7.0, 3.0]), 7.0);
        assert_eq!(rosenbrock(&[0.0, 0.0]), 1.0);
        assert_eq!(step(&[0.49, -0.5, 1.6]), 0.0 + 0.0 + 4.0);
        assert_eq!(quartic_noise(&[1.0, 1.0], 0.25), 1.0 + 2.0 + 0.25);
        assert_abs_diff_eq!(rastrigin(&[1.0]), 1.0, epsilon = 1e-12);
        assert_eq!(boundary_penalty(12.0, 10.0, 100.0, 4), 100.0 * 16.0);
        assert_eq!(boundary_penalty(-12.0, 10.0, 100.0, 4), 100.0 * 16.0);
        assert_eq!(boundary_penalty(9.0, 10.0, 100.0, 4), 0.0);
    }

    #[test]
    fn goldstein_price_minimum() {
        assert_eq!(goldstein_price(&[0.0, -1.0]), 3.0);
    }
}
