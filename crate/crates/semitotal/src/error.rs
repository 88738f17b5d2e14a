use std::process::ExitCode;

use crate::io::ParseError;

/// A failed command, classified by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable or malformed input, or a request the input cannot satisfy.
    #[error("{0}")]
    Input(String),
    /// A result the library guarantees did not hold.
    #[error("internal invariant violated: {0}")]
    Internal(String),
    /// The input was well formed but failed the requested check.
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
            CliError::Verification(_) => 3,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<semitotal_core::Error> for CliError {
    fn from(e: semitotal_core::Error) -> Self {
        use semitotal_core::Error::*;
        match e {
            InvalidRegion(_) | EmbeddingMismatch(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
