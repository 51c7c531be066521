//! Offspring-generating operators.
//!
//! Exploitation: element similarity, the short/short and long-involving
//! combination rules, mutant paths and smoothing. Exploration: one-point
//! crossover (gated by cosine similarity), single-element Gaussian mutation
//! and chaos jumps. Every operator returns an unevaluated path clipped into
//! the search box.

use crate::engine::config::PciaConfig;
use crate::error::{PciaError, Result};
use crate::objective::Evaluator;
use crate::path::Path;
use crate::population::RangeVector;
use crate::rng::Draws;
use crate::space::SearchSpace;

fn check_same(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(PciaError::DimensionMismatch { expected, actual })
    }
}

/// Per-element similarity `1 - |x[i] - y[i]| / range[i]`, clamped to `[0, 1]`.
pub fn similarity(x: &[f64], y: &[f64], range: &RangeVector) -> Result<Vec<f64>> {
    check_same(x.len(), y.len())?;
    check_same(x.len(), range.dim())?;
    Ok(x.iter()
        .zip(y)
        .zip(range.as_slice())
        .map(|((a, b), r)| (1.0 - (a - b).abs() / r).clamp(0.0, 1.0))
        .collect())
}

/// Perturb `base[i]` by `r * range[i] / 2` wherever `perturb(sim[i])` holds,
/// with a fresh `r ~ U[-1, 1]` per perturbed element.
fn reform(
    base: &Path,
    other: &Path,
    range: &RangeVector,
    space: &SearchSpace,
    draws: &mut dyn Draws,
    perturb: impl Fn(f64) -> bool,
) -> Result<Path> {
    let sim = similarity(base.position(), other.position(), range)?;
    space.check_dim(base.dim())?;
    let position = base
        .position()
        .iter()
        .zip(&sim)
        .zip(range.as_slice())
        .map(|((x, s), r)| {
            if perturb(*s) {
                x + draws.symmetric() * r / 2.0
            } else {
                *x
            }
        })
        .collect();
    Ok(Path::new(position).clip_to_bounds(space))
}

/// Combine two short paths: keep what they share, re-draw where they differ
/// (`sim < th`).
pub fn combine_short_short(
    s: &Path,
    s2: &Path,
    range: &RangeVector,
    th: f64,
    space: &SearchSpace,
    draws: &mut dyn Draws,
) -> Result<Path> {
    reform(s, s2, range, space, draws, |sim| sim < th)
}

/// Combine `base` with a long path: re-draw the elements the two share
/// (`sim > th`), keep the rest. Used with a short base against a long path
/// and for two long paths.
pub fn combine_with_long(
    base: &Path,
    other: &Path,
    range: &RangeVector,
    th: f64,
    space: &SearchSpace,
    draws: &mut dyn Draws,
) -> Result<Path> {
    reform(base, other, range, space, draws, |sim| sim > th)
}

/// `p1 + phi * (best - p1) + phi * (p2 - p3)` with one `phi ~ U(0, 1)` per call.
pub fn mutant_path(
    p1: &Path,
    p2: &Path,
    p3: &Path,
    best: &Path,
    space: &SearchSpace,
    draws: &mut dyn Draws,
) -> Result<Path> {
    for p in [p2, p3, best] {
        check_same(p1.dim(), p.dim())?;
    }
    space.check_dim(p1.dim())?;
    let phi = draws.unit_open();
    let position = (0..p1.dim())
        .map(|i| {
            let a = p1.position()[i];
            a + phi * (best.position()[i] - a) + phi * (p2.position()[i] - p3.position()[i])
        })
        .collect();
    Ok(Path::new(position).clip_to_bounds(space))
}

/// Below this derivative magnitude smoothing leaves the path alone.
pub const SMOOTH_FLAT_GUARD: f64 = 1e-12;

/// Single-coordinate Newton step toward zero cost.
///
/// Picks a coordinate `i`, estimates `d = df/dx_i` with one forward
/// difference of `smooth_fd_step * range[i]` (backward if the forward probe
/// would leave the box) and moves `x_i` by `-cost / d`, clamped to
/// `smooth_clamp * range[i]`. The probe is counted by `evaluator`. A flat
/// or non-finite probe leaves the position unchanged.
pub fn smooth_path(
    p: &Path,
    evaluator: &mut Evaluator<'_>,
    range: &RangeVector,
    cfg: &PciaConfig,
    space: &SearchSpace,
    draws: &mut dyn Draws,
) -> Result<Path> {
    if !p.is_evaluated() {
        return Err(PciaError::Unevaluated { index: 0 });
    }
    space.check_dim(p.dim())?;
    check_same(p.dim(), range.dim())?;

    let i = draws.index(p.dim());
    let mut h = cfg.smooth_fd_step * range[i];
    if p.position()[i] + h > space.upper()[i] {
        h = -h;
    }
    let mut probe = p.position().to_vec();
    probe[i] += h;
    let probe_cost = evaluator.probe(&probe, draws);
    let unchanged = || Path::new(p.position().to_vec());
    if !probe_cost.is_finite() {
        return Ok(unchanged());
    }
    let d = (probe_cost - p.cost()) / h;
    if d.is_nan() || d.abs() < SMOOTH_FLAT_GUARD {
        return Ok(unchanged());
    }
    let limit = cfg.smooth_clamp * range[i];
    let step = (p.cost() / d).clamp(-limit, limit);
    let mut position = p.position().to_vec();
    position[i] -= step;
    Ok(Path::new(position).clip_to_bounds(space))
}

/// One-point crossover after the first `cut` elements.
pub fn crossover(p1: &Path, p2: &Path, cut: usize) -> Result<(Path, Path)> {
    check_same(p1.dim(), p2.dim())?;
    let dim = p1.dim();
    if dim < 2 || cut < 1 || cut > dim - 1 {
        return Err(PciaError::InvalidCrossoverPoint {
            cut,
            max: dim.saturating_sub(1),
        });
    }
    let (a, b) = (p1.position(), p2.position());
    let child1 = [&a[..cut], &b[cut..]].concat();
    let child2 = [&b[..cut], &a[cut..]].concat();
    Ok((Path::new(child1), Path::new(child2)))
}

/// Cosine of the angle between two positions; 0 if either is the zero vector.
pub fn cosine_similarity(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        return 0.0;
    }
    (dot / (na * nb)).clamp(-1.0, 1.0)
}

/// Nudge one random element by `sigma_fraction * width * N(0, 1)`.
pub fn mutate(
    p: &Path,
    space: &SearchSpace,
    sigma_fraction: f64,
    draws: &mut dyn Draws,
) -> Result<Path> {
    space.check_dim(p.dim())?;
    let i = draws.index(p.dim());
    let sigma = sigma_fraction * space.width(i);
    let mut position = p.position().to_vec();
    position[i] += sigma * draws.standard_normal();
    Ok(Path::new(position).clip_to_bounds(space))
}

/// Jump a few elements by the full current range in a random direction.
///
/// Each element is picked with probability `alter_prob`; if none is picked,
/// one uniformly chosen element is forced. Draw order: one Bernoulli per
/// element, the forced index if needed, then one sign per picked element.
pub fn chaos(
    p: &Path,
    range: &RangeVector,
    alter_prob: f64,
    space: &SearchSpace,
    draws: &mut dyn Draws,
) -> Result<Path> {
    space.check_dim(p.dim())?;
    check_same(p.dim(), range.dim())?;
    let mut picked: Vec<usize> = (0..p.dim())
        .filter(|_| draws.bernoulli(alter_prob))
        .collect();
    if picked.is_empty() {
        picked.push(draws.index(p.dim()));
    }
    let mut position = p.position().to_vec();
    for i in picked {
        position[i] += range[i] * draws.sign();
    }
    Ok(Path::new(position).clip_to_bounds(space))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objective::FnObjective;
    use crate::rng::{FixedDraws, RngStream};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn path(x: &[f64]) -> Path {
        Path::new(x.to_vec())
    }

    fn range(values: &[f64]) -> RangeVector {
        RangeVector::from_values(values.to_vec())
    }

    fn wide(dim: usize) -> SearchSpace {
        SearchSpace::uniform(dim, -100.0, 100.0).unwrap()
    }

    #[test]
    fn similarity_by_hand() {
        let s = similarity(
            &[2.0, -3.0, 4.0, 1.0],
            &[1.5, -2.0, 3.0, 1.0],
            &range(&[10.0; 4]),
        )
        .unwrap();
        let expected = [0.95, 0.9, 0.9, 1.0];
        for (a, b) in s.iter().zip(expected) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-15);
        }
    }

    #[test]
    fn similarity_extremes() {
        let r = range(&[4.0, 4.0]);
        assert_eq!(
            similarity(&[1.0, 2.0], &[1.0, 2.0], &r).unwrap(),
            [1.0, 1.0]
        );
        assert_eq!(
            similarity(&[0.0, 0.0], &[4.0, -4.0], &r).unwrap(),
            [0.0, 0.0]
        );
        // wider than the range saturates at zero
        assert_eq!(similarity(&[0.0], &[9.0], &range(&[4.0])).unwrap(), [0.0]);
        assert!(similarity(&[0.0], &[0.0, 1.0], &r).is_err());
    }

    #[test]
    fn short_short_pinned() {
        let mut d = FixedDraws {
            symmetric: 0.5,
            ..FixedDraws::default()
        };
        let out = combine_short_short(
            &path(&[2.0, -3.0, 4.0, 1.0]),
            &path(&[1.5, -2.0, 3.0, 1.0]),
            &range(&[10.0; 4]),
            0.92,
            &wide(4),
            &mut d,
        )
        .unwrap();
        assert_eq!(out.position(), &[2.0, -0.5, 6.5, 1.0]);
        assert!(!out.is_evaluated());
    }

    #[test]
    fn short_short_identity_cases() {
        let mut rng = RngStream::new(1);
        let s = path(&[2.0, -3.0, 4.0, 1.0]);
        let out = combine_short_short(&s, &s, &range(&[10.0; 4]), 0.9, &wide(4), &mut rng).unwrap();
        assert_eq!(out.position(), s.position());

        let far = path(&[90.0, 90.0, -90.0, 50.0]);
        let out =
            combine_short_short(&s, &far, &range(&[10.0; 4]), 0.0, &wide(4), &mut rng).unwrap();
        assert_eq!(out.position(), s.position());
    }

    #[test]
    fn with_long_pinned() {
        let mut d = FixedDraws {
            symmetric: -0.2,
            ..FixedDraws::default()
        };
        let out = combine_with_long(
            &path(&[2.0, -3.0, 4.0, 1.0]),
            &path(&[1.5, -2.0, 3.0, 1.0]),
            &range(&[10.0; 4]),
            0.92,
            &wide(4),
            &mut d,
        )
        .unwrap();
        assert_eq!(out.position(), &[1.0, -3.0, 4.0, 0.0]);
    }

    #[test]
    fn with_long_identity_cases() {
        let mut rng = RngStream::new(2);
        let base = path(&[0.0, 0.0]);
        let far = path(&[4.0, -4.0]);
        let r = range(&[4.0, 4.0]);
        let out = combine_with_long(&base, &far, &r, 0.5, &wide(2), &mut rng).unwrap();
        assert_eq!(out.position(), base.position());
        let out = combine_with_long(&base, &base, &r, 1.0, &wide(2), &mut rng).unwrap();
        assert_eq!(out.position(), base.position());
    }

    #[test]
    fn mutant_pinned() {
        let unit = |u| FixedDraws {
            unit: u,
            ..FixedDraws::default()
        };
        let (p1, p2, p3, best) = (
            path(&[0.0, 0.0]),
            path(&[1.0, 0.0]),
            path(&[0.0, 1.0]),
            path(&[2.0, 2.0]),
        );
        let out = mutant_path(&p1, &p2, &p3, &best, &wide(2), &mut unit(1.0)).unwrap();
        assert_eq!(out.position(), &[3.0, 1.0]);
        let out = mutant_path(&p1, &p2, &p3, &best, &wide(2), &mut unit(0.0)).unwrap();
        assert_eq!(out.position(), p1.position());

        let same = path(&[5.0, -7.0]);
        let out =
            mutant_path(&same, &same, &same, &same, &wide(2), &mut RngStream::new(3)).unwrap();
        assert_eq!(out.position(), same.position());
    }

    #[test]
    fn smoothing_newton_step() {
        // f(x) = 2 x0 + 2, so f(p) = 4 at p = [1, 1] and the probe at +0.1 is 4.2
        let f = FnObjective::new(2, |x: &[f64]| 2.0 * x[0] + 2.0);
        let mut ev = Evaluator::new(&f);
        let p = Path::with_cost(vec![1.0, 1.0], 4.0).unwrap();
        let cfg = PciaConfig::default();
        let r = range(&[100.0, 100.0]);
        let out = smooth_path(&p, &mut ev, &r, &cfg, &wide(2), &mut FixedDraws::zero()).unwrap();
        assert_abs_diff_eq!(out.position()[0], 1.0 - 2.0, epsilon = 1e-9);
        assert_eq!(out.position()[1], 1.0);
        assert_eq!(ev.count(), 1);
        assert!(!out.is_evaluated());
    }

    #[test]
    fn smoothing_step_is_clamped() {
        let f = FnObjective::new(1, |x: &[f64]| 2.0 * x[0] + 2.0);
        let mut ev = Evaluator::new(&f);
        let p = Path::with_cost(vec![1.0], 4.0).unwrap();
        let cfg = PciaConfig::default();
        let out = smooth_path(
            &p,
            &mut ev,
            &range(&[2.0]),
            &cfg,
            &wide(1),
            &mut FixedDraws::zero(),
        )
        .unwrap();
        // step 2 limited to 0.5 * 2
        assert_abs_diff_eq!(out.position()[0], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn smoothing_no_ops() {
        let cfg = PciaConfig::default();
        let r = range(&[10.0]);
        let mut d = FixedDraws::zero();

        let zero = FnObjective::new(1, |x: &[f64]| x[0] * x[0]);
        let mut ev = Evaluator::new(&zero);
        let at_target = Path::with_cost(vec![0.0], 0.0).unwrap();
        let out = smooth_path(&at_target, &mut ev, &r, &cfg, &wide(1), &mut d).unwrap();
        assert_eq!(out.position(), &[0.0]);

        let flat = FnObjective::new(1, |_: &[f64]| 3.0);
        let mut ev = Evaluator::new(&flat);
        let p = Path::with_cost(vec![0.3], 3.0).unwrap();
        let out = smooth_path(&p, &mut ev, &r, &cfg, &wide(1), &mut d).unwrap();
        assert_eq!(out.position(), &[0.3]);

        let broken = FnObjective::new(1, |x: &[f64]| if x[0] > 0.3 { f64::NAN } else { 1.0 });
        let mut ev = Evaluator::new(&broken);
        let p = Path::with_cost(vec![0.3], 1.0).unwrap();
        let out = smooth_path(&p, &mut ev, &r, &cfg, &wide(1), &mut d).unwrap();
        assert_eq!(out.position(), &[0.3]);
        assert_eq!(ev.count(), 1);
    }

    #[test]
    fn smoothing_probe_stays_in_box() {
        let space = SearchSpace::uniform(1, 0.0, 1.0).unwrap();
        let f = FnObjective::new(1, |x: &[f64]| {
            assert!(x[0] <= 1.0);
            x[0] + 1.0
        });
        let mut ev = Evaluator::new(&f);
        let p = Path::with_cost(vec![1.0], 2.0).unwrap();
        let out = smooth_path(
            &p,
            &mut ev,
            &range(&[1.0]),
            &PciaConfig::default(),
            &space,
            &mut FixedDraws::zero(),
        )
        .unwrap();
        assert!(space.contains(out.position()));
    }

    #[test]
    fn crossover_by_hand() {
        let (p1, p2) = (path(&[1.0, 2.0, 3.0, 4.0]), path(&[5.0, 6.0, 7.0, 8.0]));
        let (a, b) = crossover(&p1, &p2, 2).unwrap();
        assert_eq!(a.position(), &[1.0, 2.0, 7.0, 8.0]);
        assert_eq!(b.position(), &[5.0, 6.0, 3.0, 4.0]);
        let (a, b) = crossover(&p1, &p2, 3).unwrap();
        assert_eq!(a.position(), &[1.0, 2.0, 3.0, 8.0]);
        assert_eq!(b.position(), &[5.0, 6.0, 7.0, 4.0]);
        let (a, b) = crossover(&p1, &p1, 1).unwrap();
        assert_eq!((a.position(), b.position()), (p1.position(), p1.position()));
    }

    #[test]
    fn crossover_rejects_bad_cut() {
        let (p1, p2) = (path(&[1.0, 2.0]), path(&[3.0, 4.0]));
        assert!(crossover(&p1, &p2, 0).is_err());
        assert!(crossover(&p1, &p2, 2).is_err());
        assert!(crossover(&path(&[1.0]), &path(&[2.0]), 1).is_err());
    }

    #[test]
    fn cosine_cases() {
        assert_abs_diff_eq!(
            cosine_similarity(&[3.0, 4.0], &[3.0, 4.0]),
            1.0,
            epsilon = 1e-15
        );
        assert_eq!(cosine_similarity(&[1.0, 0.0], &[0.0, 1.0]), 0.0);
        assert_abs_diff_eq!(
            cosine_similarity(&[1.0, 0.0], &[1.0, 1.0]),
            std::f64::consts::FRAC_1_SQRT_2,
            epsilon = 1e-15
        );
        assert_eq!(cosine_similarity(&[0.0, 0.0], &[1.0, 1.0]), 0.0);
    }

    #[test]
    fn mutation_pinned() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let normal = |n| FixedDraws {
            normal: n,
            ..FixedDraws::default()
        };
        let p = path(&[0.0, 0.0]);
        assert_eq!(
            mutate(&p, &space, 0.1, &mut normal(0.0))
                .unwrap()
                .position(),
            &[0.0, 0.0]
        );
        assert_eq!(
            mutate(&p, &space, 0.1, &mut normal(1.0))
                .unwrap()
                .position(),
            &[2.0, 0.0]
        );
        assert_eq!(
            mutate(&p, &space, 0.1, &mut normal(-1.0))
                .unwrap()
                .position(),
            &[-2.0, 0.0]
        );
    }

    #[test]
    fn chaos_pinned() {
        let forced = |sign| FixedDraws {
            unit: 1.0,
            index: 0,
            sign,
            ..FixedDraws::default()
        };
        let p = path(&[1.0, 1.0]);
        let r = range(&[4.0, 4.0]);
        assert_eq!(
            chaos(&p, &r, 0.1, &wide(2), &mut forced(1.0))
                .unwrap()
                .position(),
            &[5.0, 1.0]
        );
        assert_eq!(
            chaos(&p, &r, 0.1, &wide(2), &mut forced(-1.0))
                .unwrap()
                .position(),
            &[-3.0, 1.0]
        );
    }

    #[test]
    fn chaos_always_changes_something() {
        let mut rng = RngStream::new(9);
        let p = path(&[0.0; 8]);
        let r = range(&[1.0; 8]);
        for _ in 0..500 {
            let out = chaos(&p, &r, 1e-9, &wide(8), &mut rng).unwrap();
            let changed = out.position().iter().filter(|v| **v != 0.0).count();
            assert_eq!(changed, 1);
        }
    }

    type Case = (Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>, u64);

    fn arb_case() -> impl Strategy<Value = Case> {
        (1usize..7).prop_flat_map(|d| {
            (
                prop::collection::vec(-5.0f64..5.0, d),
                prop::collection::vec(-5.0f64..5.0, d),
                prop::collection::vec(-5.0f64..5.0, d),
                prop::collection::vec(-5.0f64..5.0, d),
                prop::collection::vec(1e-6f64..20.0, d),
                any::<u64>(),
            )
        })
    }

    proptest! {
        #[test]
        fn similarity_bounded_and_reflexive((x, y, _, _, r, _) in arb_case()) {
            let range = RangeVector::from_values(r);
            for s in similarity(&x, &y, &range).unwrap() {
                prop_assert!((0.0..=1.0).contains(&s));
            }
            prop_assert!(similarity(&x, &x, &range).unwrap().iter().all(|s| *s == 1.0));
        }

        #[test]
        fn every_operator_stays_in_box((a, b, c, e, r, seed) in arb_case()) {
            let dim = a.len();
            let space = SearchSpace::uniform(dim, -1.0, 1.0).unwrap();
            let range = RangeVector::from_values(r);
            let mut rng = RngStream::new(seed);
            let (pa, pb, pc, pe) = (path(&a), path(&b), path(&c), path(&e));
            let cfg = PciaConfig::default();
            let mut outs = vec![
                combine_short_short(&pa, &pb, &range, 0.5, &space, &mut rng).unwrap(),
                combine_with_long(&pa, &pb, &range, 0.5, &space, &mut rng).unwrap(),
                mutant_path(&pa, &pb, &pc, &pe, &space, &mut rng).unwrap(),
                mutate(&pa, &space, 0.5, &mut rng).unwrap(),
                chaos(&pa, &range, 0.3, &space, &mut rng).unwrap(),
            ];
            let clipped = pa.clone().clip_to_bounds(&space);
            let f = FnObjective::new(dim, |x: &[f64]| x.iter().map(|v| (v - 0.3).powi(2)).sum::<f64>() + 0.1);
            let mut ev = Evaluator::new(&f);
            let evaluated = ev.evaluate(clipped, &mut rng).unwrap();
            outs.push(smooth_path(&evaluated, &mut ev, &range, &cfg, &space, &mut rng).unwrap());
            for o in outs {
                prop_assert!(space.contains(o.position()), "{:?}", o.position());
            }
        }

        #[test]
        fn crossover_swaps_positionwise((a, b, _, _, _, seed) in arb_case()) {
            prop_assume!(a.len() >= 2);
            let cut = 1 + (seed as usize) % (a.len() - 1);
            let (n1, n2) = crossover(&path(&a), &path(&b), cut).unwrap();
            for i in 0..a.len() {
                let mut got = [n1.position()[i], n2.position()[i]];
                let mut want = [a[i], b[i]];
                got.sort_by(f64::total_cmp);
                want.sort_by(f64::total_cmp);
                prop_assert_eq!(got, want);
            }
        }

        #[test]
        fn mutant_with_equal_differences_lies_on_segment((a, _, c, e, _, seed) in arb_case()) {
            let space = wide(a.len());
            let mut rng = RngStream::new(seed);
            let out = mutant_path(&path(&a), &path(&c), &path(&c), &path(&e), &space, &mut rng).unwrap();
            // recover phi from the largest coordinate gap and check every coordinate agrees
            let k = (0..a.len()).max_by(|&i, &j| (e[i] - a[i]).abs().total_cmp(&(e[j] - a[j]).abs())).unwrap();
            prop_assume!((e[k] - a[k]).abs() > 1e-6);
            let phi = (out.position()[k] - a[k]) / (e[k] - a[k]);
            prop_assert!(phi > 0.0 && phi < 1.0 + 1e-12);
            for i in 0..a.len() {
                let expected = a[i] + phi * (e[i] - a[i]);
                prop_assert!((out.position()[i] - expected).abs() < 1e-9);
            }
        }

        #[test]
        fn clip_is_idempotent(x in prop::collection::vec(-300.0f64..300.0, 1..6)) {
            let space = wide(x.len());
            let once = path(&x).clip_to_bounds(&space);
            let twice = once.clone().clip_to_bounds(&space);
            prop_assert_eq!(once.position(), twice.position());
        }
    }
}
