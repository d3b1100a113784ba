use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the physics and numerics layers.
///
/// Convergence failures carry the best value reached so callers can decide
/// whether a partial answer is still usable.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "Matsubara sum not converged after {n_used} terms \
         (partial value {value:.6e}, tail estimate {tail_estimate:.6e})"
    )]
    MatsubaraTruncation {
        value: f64,
        n_used: usize,
        tail_estimate: f64,
    },

    #[error(
        "quadrature not converged after {subdivisions} subdivisions \
         (best value {value:.6e}, error estimate {error_estimate:.6e})"
    )]
    QuadratureConvergence {
        value: f64,
        error_estimate: f64,
        subdivisions: usize,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("step-size error: {0}")]
    StepSize(String),

    #[error("instability: {0}")]
    Instability(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    /// True for convergence-type failures (as opposed to bad inputs).
    pub fn is_convergence(&self) -> bool {
        matches!(
            self,
            Error::MatsubaraTruncation { .. }
                | Error::QuadratureConvergence { .. }
                | Error::Consistency(_)
        )
    }
}
