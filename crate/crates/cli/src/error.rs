use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed document: {0}")]
    Parse(String),
    #[error("edge {index}: {message}")]
    InvalidEdge { index: usize, message: String },
    #[error(transparent)]
    Core(#[from] gainsym::Error),
}

impl CliError {
    /// 2 for bad input, 3 for internal inconsistency, 4 for resource caps.
    pub fn exit_code(&self) -> i32 {
        use gainsym::Error as E;
        match self {
            CliError::Core(E::Inconsistent(_) | E::ConvergenceFailure) => 3,
            CliError::Core(E::TooLarge { .. } | E::BudgetExceeded(_)) => 4,
            _ => 2,
        }
    }
}
