use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A matrix has the wrong shape for the operation.
    #[error("dimension error: expected {expected}, got {got}")]
    Dimension { expected: String, got: String },

    /// An iterative procedure did not reach its target accuracy.
    ///
    /// `partial` is the best value obtained; `bound` is an estimate of its
    /// remaining error.
    #[error("convergence error: partial value {partial}, error bound {bound}")]
    Convergence { partial: f64, bound: f64 },

    /// Arguments are individually valid but the combination is not supported.
    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
