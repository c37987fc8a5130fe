use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    Validation(String),

    /// The instance is larger than the configured limit for the requested engine.
    #[error("capacity exceeded: {what} has size {size}, limit is {limit}")]
    Capacity {
        what: String,
        size: usize,
        limit: usize,
    },

    /// An internal invariant was broken. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn capacity(what: impl Into<String>, size: usize, limit: usize) -> Self {
        Error::Capacity {
            what: what.into(),
            size,
            limit,
        }
    }

    pub(crate) fn check_capacity(what: &str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            Err(Error::capacity(what, size, limit))
        } else {
            Ok(())
        }
    }

    /// Short machine-readable tag, used by the CLI's JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Validation(_) => "validation",
            Error::Capacity { .. } => "capacity",
            Error::Invariant(_) => "invariant",
        }
    }
}
