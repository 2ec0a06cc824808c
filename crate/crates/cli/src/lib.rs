//! Library side of the `tubetors` binary: command implementations writing to
//! any `io::Write`, and the SVG renderer.

pub mod commands;
pub mod render;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Cap(String),

    #[error("verification failed: {0}")]
    Mismatch(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for a failed check, 2 for bad input, 3 for an exceeded cap.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<tube_torsion::Error> for CliError {
    fn from(e: tube_torsion::Error) -> Self {
        match e {
            tube_torsion::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("malformed JSON: {e}"))
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;
