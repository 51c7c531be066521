//! The optimizer: configuration, operators, elitist selection, the restart
//! rule and the main loop.

pub mod config;
pub mod operators;
pub mod optimizer;
pub mod restart;
pub mod selection;

pub use config::PciaConfig;
pub use optimizer::{optimize, optimize_with_observer, IterationSnapshot, RunResult};
pub use restart::check_restart;
pub use selection::select_next_generation;
