use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{what} of size {size} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("check failed: {0}")]
    CheckFailed(String),

    /// Raised by the machine-word elimination paths; callers retry with big integers.
    #[error("machine integer overflow")]
    Overflow,
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::CapExceeded { .. } => 3,
            Error::CheckFailed(_) | Error::Overflow => 4,
            Error::Precondition(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
