use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// `TheoremViolation` and `Internal` are never expected to fire: they turn a
/// failed exact identity into a loud error instead of a silent wrong answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("identity violated: {0}")]
    TheoremViolation(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("work bound exceeded: {required} instances requested, limit is {limit}")]
    WorkBound { required: u128, limit: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
