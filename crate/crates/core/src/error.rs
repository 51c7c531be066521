use thiserror::Error;

/// Errors raised by the optimizer, the problem suites and their loaders.
#[derive(Debug, Error)]
pub enum PciaError {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid search space: {0}")]
    InvalidSpace(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("population is empty")]
    EmptyPopulation,

    #[error("path {index} has not been evaluated")]
    Unevaluated { index: usize },

    #[error("objective returned non-finite value {value} at {position:?}")]
    NonFiniteCost { value: f64, position: Vec<f64> },

    #[error("crossover point {cut} outside 1..={max}")]
    InvalidCrossoverPoint { cut: usize, max: usize },

    #[error("unknown problem `{name}`; available: {available}")]
    UnknownProblem { name: String, available: String },

    #[error("matrix file {path}: expected {expected} values, found {found}")]
    MatrixElementCount {
        path: String,
        expected: usize,
        found: usize,
    },

    #[error("matrix file {path}: cannot parse `{token}` at row {row}, column {column}")]
    MatrixParse {
        path: String,
        row: usize,
        column: usize,
        token: String,
    },

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = PciaError> = std::result::Result<T, E>;
