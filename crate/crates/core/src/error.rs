use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("computation failed: {0}")]
    Compute(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn compute(msg: impl Into<String>) -> Self {
        Error::Compute(msg.into())
    }

    /// Validation-type failures (bad input) vs. failures of a computation on valid input.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Compute(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
