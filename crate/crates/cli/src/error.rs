use thiserror::Error;

/// Harness failures that map onto process exit codes.
#[derive(Debug, Error)]
pub enum HarnessError {
    /// Unreadable input or infeasible parameters; exit code 2.
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] regpow_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl HarnessError {
    pub fn input(msg: impl Into<String>) -> Self {
        HarnessError::Input(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILURE: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
    pub const MISMATCH: i32 = 3;
}
