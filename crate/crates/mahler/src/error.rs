use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An argument violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// The root finder exhausted its iteration budget.
    #[error(
        "root finding did not converge: best residual {residual:.3e} after {iterations} iterations"
    )]
    Convergence { residual: f64, iterations: u32 },

    /// Contour quadrature could not avoid a zero of the integrand.
    #[error("quadrature error: {0}")]
    Quadrature(String),

    /// The element described by the input is elliptic or parabolic.
    #[error("element is not hyperbolic: {0}")]
    NotHyperbolic(String),

    /// A checkpoint file is missing, corrupt, or from another run.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
