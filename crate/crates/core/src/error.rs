use thiserror::Error;

/// Errors shared across the library. Law violations are not errors: checkers
/// return a [`crate::Report`] instead. These cover malformed inputs and
/// exceeded search budgets.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("format error: {0}")]
    Format(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("length bound exceeded: {0}")]
    Bound(String),
    #[error("incomplete decomposition data: {0}")]
    IncompleteDecomposition(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("unknown kind: {0}")]
    UnknownKind(String),
}

impl Error {
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}
