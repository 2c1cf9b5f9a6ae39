use thiserror::Error;

/// Errors raised by the toolkit.
///
/// The variants are grouped so that front ends can map them onto exit
/// codes: [`Error::Parse`] is a syntax problem, [`Error::Capacity`] means the
/// input is outside what the factorization engine supports, and everything
/// else is a violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("coefficient of a word of length {length} requested beyond truncation horizon {horizon}")]
    Truncation { length: usize, horizon: usize },
    #[error("series is proper and has no shuffle inverse")]
    NotInvertible,
    #[error("series is not linearly nullable (verdict: {0})")]
    Classification(String),
    #[error("insufficient horizon: need at least {needed}, series is truncated at {horizon}")]
    InsufficientHorizon { needed: usize, horizon: usize },
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by malformed input text.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }

    /// True for errors caused by the factorization envelope.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
