use alloc::string::String;

/// Errors produced by tensor construction and the inverse computations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("singular value decomposition did not converge after {sweeps} sweeps")]
    NumericalFailure { sweeps: usize },
    #[error("tensor is not square: {0}")]
    NotSquare(String),
    #[error("tensor is singular: rank {rank} of {order}")]
    Singular { rank: usize, order: usize },
    #[error("invalid rank policy: {0}")]
    InvalidPolicy(String),
    #[error("R*S*T does not reproduce A (relative residual {0:e})")]
    InconsistentFactorization(f64),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
