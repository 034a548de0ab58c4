use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside the range an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    /// A search or enumeration ran past its configured limit.
    #[error("budget exhausted: {what} exceeded the limit of {limit}")]
    Budget { what: &'static str, limit: u64 },

    #[error("generator {position} has a non-linear colon ideal; the linear-quotients formula does not apply")]
    NotLinearQuotients { position: usize },

    /// Two computations that must agree did not, or an input table is self-contradictory.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
