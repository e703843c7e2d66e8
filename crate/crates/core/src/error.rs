use thiserror::Error;

/// Errors surfaced by the exact and numeric routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("divergent multiple zeta value {0}: leading argument is an unbarred 1")]
    Divergent(String),

    #[error("{what} did not converge (error estimate {estimate:e}, target {target:e})")]
    NonConvergence {
        what: String,
        estimate: f64,
        target: f64,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn is_non_convergence(&self) -> bool {
        matches!(self, Error::NonConvergence { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
