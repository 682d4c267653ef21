use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] gpav_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    /// 1 for a failed verification or an internal inconsistency, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        use gpav_core::Error as E;
        match self {
            CliError::Mismatch(_) | CliError::Io(_) | CliError::Json(_) | CliError::Pool(_) => 1,
            CliError::Core(E::NotACount { .. } | E::NegativeBinomial { .. }) => 1,
            CliError::Core(_) | CliError::Usage(_) => 2,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
