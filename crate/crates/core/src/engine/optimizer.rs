use crate::engine::config::PciaConfig;
use crate::engine::operators::{
    chaos, combine_short_short, combine_with_long, cosine_similarity, crossover, mutant_path,
    mutate, smooth_path,
};
use crate::engine::restart::check_restart;
use crate::engine::selection::select_next_generation;
use crate::error::Result;
use crate::objective::{Evaluator, Objective};
use crate::path::Path;
use crate::population::{Label, Population};
use crate::rng::{Draws, RngStream};
use crate::space::SearchSpace;

/// Random pairs tried per crossover slot before giving up on the cosine gate.
pub const CROSSOVER_ATTEMPTS: usize = 10;

/// Outcome of one [`optimize`] call.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    /// Best path over all restarts.
    pub best_path: Path,
    /// Global best cost at the end of each iteration.
    pub best_cost_trace: Vec<f64>,
    /// Cumulative objective evaluations at the end of each iteration.
    pub evaluation_trace: Vec<u64>,
    /// 1-based iterations that ended with a restart.
    pub restart_iterations: Vec<usize>,
    pub evaluations: u64,
    pub restarts: usize,
    pub seed: u64,
}

/// State handed to an observer after every iteration.
#[derive(Debug)]
pub struct IterationSnapshot<'a> {
    /// 1-based.
    pub iteration: usize,
    /// Population entering the next iteration, sorted by cost.
    pub population: &'a [Path],
    /// The population discarded by a restart at the end of this iteration.
    pub discarded: Option<&'a [Path]>,
    pub best: &'a Path,
    pub evaluations: u64,
    pub iteration_evaluations: u64,
}

/// Minimize `objective` over `space`.
pub fn optimize(
    objective: &dyn Objective,
    space: &SearchSpace,
    cfg: &PciaConfig,
) -> Result<RunResult> {
    optimize_with_observer(objective, space, cfg, |_| {})
}

/// [`optimize`], calling `observer` at the end of every iteration.
///
/// One iteration draws, in this order: the refinement pairs and their
/// perturbations, the mutant paths, the smoothed paths (with their probe
/// evaluations), crossover, mutation and chaos; then evaluates all offspring
/// in generation order, merges elitistically and, if the population's best
/// cost has stalled for `restart_window` iterations, replaces the whole
/// population with a fresh random one. The stall test looks only at
/// iterations since the last restart.
pub fn optimize_with_observer<F>(
    objective: &dyn Objective,
    space: &SearchSpace,
    cfg: &PciaConfig,
    mut observer: F,
) -> Result<RunResult>
where
    F: FnMut(&IterationSnapshot<'_>),
{
    cfg.validate()?;
    space.check_dim(objective.dim())?;

    let mut rng = RngStream::new(cfg.seed);
    let mut evaluator = Evaluator::new(objective);
    let mut members = random_population(space, cfg.pop_size, &mut evaluator, &mut rng)?;
    let mut best = members[0].clone();

    let mut best_cost_trace = Vec::with_capacity(cfg.max_iters);
    let mut evaluation_trace = Vec::with_capacity(cfg.max_iters);
    let mut restart_iterations = Vec::new();
    let mut epoch_trace = Vec::new();

    for iteration in 1..=cfg.max_iters {
        let start = evaluator.count();
        let population = Population::new(members, space)?;
        let offspring = generate_offspring(&population, space, cfg, &mut evaluator, &mut rng)?;
        let offspring = offspring
            .into_iter()
            .map(|p| evaluator.evaluate(p, &mut rng))
            .collect::<Result<Vec<_>>>()?;
        members = select_next_generation(population.into_members(), offspring, cfg.pop_size)?;

        epoch_trace.push(members[0].cost());
        if members[0].cost() < best.cost() {
            best = members[0].clone();
        }

        let mut discarded = None;
        if check_restart(&epoch_trace, cfg.restart_window, cfg.restart_threshold) {
            let fresh = random_population(space, cfg.pop_size, &mut evaluator, &mut rng)?;
            discarded = Some(std::mem::replace(&mut members, fresh));
            epoch_trace.clear();
            restart_iterations.push(iteration);
            if members[0].cost() < best.cost() {
                best = members[0].clone();
            }
        }

        best_cost_trace.push(best.cost());
        evaluation_trace.push(evaluator.count());
        observer(&IterationSnapshot {
            iteration,
            population: &members,
            discarded: discarded.as_deref(),
            best: &best,
            evaluations: evaluator.count(),
            iteration_evaluations: evaluator.count() - start,
        });
    }

    Ok(RunResult {
        best_path: best,
        best_cost_trace,
        evaluation_trace,
        restarts: restart_iterations.len(),
        restart_iterations,
        evaluations: evaluator.count(),
        seed: cfg.seed,
    })
}

/// `m` evaluated uniform random paths, sorted by cost.
fn random_population(
    space: &SearchSpace,
    m: usize,
    evaluator: &mut Evaluator<'_>,
    rng: &mut RngStream,
) -> Result<Vec<Path>> {
    let mut members = Vec::with_capacity(m);
    for _ in 0..m {
        let position = (0..space.dim())
            .map(|i| space.lower()[i] + rng.unit() * space.width(i))
            .collect();
        members.push(evaluator.evaluate(Path::new(position), rng)?);
    }
    members.sort_by(|a, b| a.cost().total_cmp(&b.cost()));
    Ok(members)
}

/// Uniform index in `0..n` not contained in `taken`.
fn distinct_index(rng: &mut dyn Draws, n: usize, taken: &[usize]) -> usize {
    debug_assert!(taken.len() < n);
    loop {
        let i = rng.index(n);
        if !taken.contains(&i) {
            return i;
        }
    }
}

fn generate_offspring(
    population: &Population,
    space: &SearchSpace,
    cfg: &PciaConfig,
    evaluator: &mut Evaluator<'_>,
    rng: &mut RngStream,
) -> Result<Vec<Path>> {
    let members = population.members();
    let labels = population.labels();
    let range = population.range();
    let m = members.len();
    let th = cfg.sim_threshold;
    let mut out = Vec::with_capacity(cfg.evaluations_per_iteration() as usize);

    for _ in 0..cfg.n_refined / 2 {
        let i = rng.index(m);
        let j = distinct_index(rng, m, &[i]);
        let (a, b) = (&members[i], &members[j]);
        match (labels[i], labels[j]) {
            (Label::Short, Label::Short) => {
                out.push(combine_short_short(a, b, range, th, space, rng)?);
                out.push(combine_short_short(b, a, range, th, space, rng)?);
            }
            (Label::Long, Label::Long) => {
                out.push(combine_with_long(a, b, range, th, space, rng)?);
                out.push(combine_with_long(b, a, range, th, space, rng)?);
            }
            (Label::Short, Label::Long) | (Label::Long, Label::Short) => {
                let (s, l) = if labels[i] == Label::Short {
                    (a, b)
                } else {
                    (b, a)
                };
                out.push(combine_short_short(s, l, range, th, space, rng)?);
                out.push(combine_with_long(s, l, range, th, space, rng)?);
            }
        }
    }

    let best = population.best_index();
    for _ in 0..cfg.n_mutant {
        let i1 = distinct_index(rng, m, &[best]);
        let i2 = distinct_index(rng, m, &[best, i1]);
        let i3 = distinct_index(rng, m, &[best, i1, i2]);
        out.push(mutant_path(
            &members[i1],
            &members[i2],
            &members[i3],
            &members[best],
            space,
            rng,
        )?);
    }

    for _ in 0..cfg.n_smoothed {
        let p = &members[rng.index(m)];
        out.push(smooth_path(p, evaluator, range, cfg, space, rng)?);
    }

    let dim = space.dim();
    for _ in 0..cfg.n_crossover_pairs {
        let mut children = None;
        let mut last = (0, 0);
        for _ in 0..CROSSOVER_ATTEMPTS {
            let i = rng.index(m);
            let j = distinct_index(rng, m, &[i]);
            last = (i, j);
            let (a, b) = (&members[i], &members[j]);
            if dim >= 2 && cosine_similarity(a.position(), b.position()) < cfg.cosine_threshold {
                let cut = 1 + rng.index(dim - 1);
                children = Some(crossover(a, b, cut)?);
                break;
            }
        }
        // No dissimilar pair found: the slot re-evaluates the last pair as is.
        let (c1, c2) = children.unwrap_or_else(|| {
            (
                Path::new(members[last.0].position().to_vec()),
                Path::new(members[last.1].position().to_vec()),
            )
        });
        out.push(c1);
        out.push(c2);
    }

    for _ in 0..cfg.n_mutations {
        let p = &members[rng.index(m)];
        out.push(mutate(p, space, cfg.sigma_fraction, rng)?);
    }

    for _ in 0..cfg.n_chaos {
        let p = &members[rng.index(m)];
        out.push(chaos(p, range, cfg.chaos_alter_prob, space, rng)?);
    }

    Ok(out)
}
