//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by basis construction, decomposition, reduction,
/// integration, and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is not symplectic: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotSymplectic { residual: f64, tol: f64 },

    #[error("degenerate input data: {0}")]
    DegenerateData(String),

    #[error(
        "projection-error ordering violated: 0.5*E_cot(4k)={half_cot_4k:.6e}, \
         E_pod(2k)={pod_2k:.6e}, E_cot(2k)={cot_2k:.6e}"
    )]
    ErrorOrderingViolated {
        half_cot_4k: f64,
        pod_2k: f64,
        cot_2k: f64,
    },

    #[error("singular linear system: {context} (condition estimate {condition:.3e})")]
    SingularSystem { context: String, condition: f64 },

    #[error("nonlinear solve failed to converge after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("energy-rate discrepancy {discrepancy:.6e} exceeds bound {bound:.6e}")]
    RateBoundViolated { discrepancy: f64, bound: f64 },

    #[error("eigensolver failed: {0}")]
    EigenFailure(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
