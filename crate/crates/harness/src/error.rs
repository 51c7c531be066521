use std::path::PathBuf;

use pcia::PciaError;
use thiserror::Error;

/// Errors of the harness. Everything detected before the first run starts is
/// a configuration error (exit code 1); the rest are runtime errors (exit 2).
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("cannot read config {path}: {source}")]
    ConfigRead {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot parse config {path}: {source}")]
    ConfigParse {
        path: PathBuf,
        #[source]
        source: toml::de::Error,
    },

    #[error(transparent)]
    Problem(PciaError),

    #[error("run {repeat} failed: {source}")]
    Run {
        repeat: usize,
        #[source]
        source: PciaError,
    },

    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot write {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl HarnessError {
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Config(_)
            | HarnessError::ConfigRead { .. }
            | HarnessError::ConfigParse { .. }
            | HarnessError::Problem(_) => 1,
            HarnessError::Run { .. } | HarnessError::Output { .. } | HarnessError::Csv { .. } => 2,
        }
    }
}

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;
