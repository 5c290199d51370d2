//! Error taxonomy shared by every module.
//!
//! The split mirrors how callers react: argument/resource errors are caller
//! mistakes, convergence/numeric errors are runtime failures of a method.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input violates a documented precondition or domain restriction.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Input is admissible in principle but exceeds a deliberate size guard.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    /// An iterative method failed to reach its tolerance within budget.
    #[error("convergence failure: {0}")]
    Convergence(String),
    /// Floating-point evaluation produced non-finite or unusable values.
    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn limit(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
}
