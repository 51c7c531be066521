//! Constrained problems and their exterior-penalty reformulation.

mod penalty;
mod problems;

pub use penalty::{
    max_violation, penalized_objective, penalty_terms, terms_of, violation_of, PenalizedObjective,
    PenaltyConfig,
};
pub use problems::{
    eval_constrained, lookup_problem, ConstrainedProblem, ConstraintValues, Sense, PROBLEM_NAMES,
};
