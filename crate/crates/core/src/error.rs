use thiserror::Error;

/// A bounded search gave up before reaching a decision.
///
/// This is never a "no": callers should raise the bound named in `what` and retry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("search bound exceeded: {what} (limit {limit})")]
pub struct BoundExceeded {
    pub what: &'static str,
    pub limit: usize,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Bound(#[from] BoundExceeded),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("move position {position} out of range for a factorization of length {len}")]
    MoveOutOfRange { position: usize, len: usize },
    #[error("unknown macro `{0}`")]
    UnknownMacro(String),
    #[error("bad macro arguments for `{name}`: {message}")]
    MacroArgs { name: String, message: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("product is not the identity: {0}")]
    NotIdentity(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
