use thiserror::Error;

/// Errors reported by the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside the domain of the operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The requested object provably does not exist.
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// A bounded construction search ran out of candidates without a witness.
    #[error("not found: {0}")]
    NotFound(String),
    /// Malformed graph6 or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
