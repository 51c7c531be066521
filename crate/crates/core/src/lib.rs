//! Path construction imitation optimizer.
//!
//! A population of candidate solutions ("paths") is refined by combining
//! short and long paths, building mutant paths toward the current best and
//! smoothing paths with a finite-difference step; crossover, mutation and
//! chaos keep exploring, and a stagnation check restarts the population.
//!
//! The crate also ships the F1-F23 benchmark functions with a shift and
//! rotation wrapper, and the G1-G13 constrained problems exposed through an
//! exterior penalty.
//!
//! ```
//! use pcia::{optimize, BenchmarkDescriptor, Benchmark, PciaConfig};
//!
//! let f1 = BenchmarkDescriptor::new(Benchmark::F1).with_dim(5).unwrap();
//! let cfg = PciaConfig::for_population(20).with_max_iters(50).with_seed(7);
//! let run = optimize(&f1, f1.space(), &cfg).unwrap();
//! assert!(run.best_path.cost() < 1e-2);
//! ```

pub mod benchmarks;
pub mod constrained;
pub mod engine;
mod error;
mod objective;
mod path;
mod population;
mod rng;
mod space;

pub use benchmarks::{
    eval_benchmark, lookup_function, make_transformed, Benchmark, BenchmarkDescriptor,
    TransformedObjective,
};
pub use constrained::{
    eval_constrained, lookup_problem, max_violation, penalized_objective, penalty_terms,
    ConstrainedProblem, ConstraintValues, PenalizedObjective, PenaltyConfig, Sense,
};
pub use engine::{
    check_restart, optimize, optimize_with_observer, select_next_generation, IterationSnapshot,
    PciaConfig, RunResult,
};
pub use error::{PciaError, Result};
pub use objective::{Evaluator, FnObjective, Objective};
pub use path::Path;
pub use population::{
    classify_paths, compute_range, Label, Population, RangeVector, EPSILON_RANGE,
};
pub use rng::{Draws, FixedDraws, RngStream};
pub use space::SearchSpace;
