//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by tensor, invariant and decision operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:.3e} exceeds {tolerance:.3e})")]
    NonHermitianInput { deviation: f64, tolerance: f64 },

    #[error("decomposition failed to converge")]
    ConvergenceFailure,

    #[error("state is not bipartite (got {0} subsystems)")]
    NotBipartite(usize),

    #[error("mode {mode} out of range for an order-{order} tensor")]
    ModeOutOfRange { mode: usize, order: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("state is not normalized (norm deviates by {0:.3e})")]
    NotNormalized(f64),

    #[error("matrix is not unitary (residual {0:.3e})")]
    NotUnitary(f64),

    #[error("component index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("word enumeration exceeds the budget of {cap} words")]
    BudgetExceeded { cap: usize },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("spectrum has more than one degenerate eigenvalue cluster")]
    MultipleDegenerateClusters,

    #[error("state is not of isotropic-like form: {0}")]
    NotIsotropicLike(String),

    #[error("state is not of white-noise form: {0}")]
    NotWhiteNoiseForm(String),

    #[error("eigenbasis alignment stayed degenerate after all retries")]
    DegenerateAlignment,

    #[error("witness validation failed (residual {0:.3e})")]
    ValidationFailed(f64),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
