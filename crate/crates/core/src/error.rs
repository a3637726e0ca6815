use thiserror::Error;

/// Errors produced by the exact core and the modules built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicands {left} and {right} cannot be lifted to a common tower")]
    RadicandMismatch { left: String, right: String },
    #[error("negative radicand {0}")]
    NegativeRadicand(String),
    #[error("digits must be at least 1")]
    InvalidDigits,
    #[error("{0}")]
    Domain(String),
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("{0} has no exact representation here")]
    NotExact(String),
    #[error("fold trace is empty")]
    EmptyTrace,
    #[error("invalid style: {0}")]
    InvalidStyle(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
