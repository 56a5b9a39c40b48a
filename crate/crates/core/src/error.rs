use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and decision layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix does not have full row rank")]
    RankDeficient,

    #[error("convex body is unbounded")]
    UnboundedBody,

    #[error("cone is not pointed")]
    NotPointed,

    #[error("enumeration budget exceeded ({0} steps)")]
    BudgetExceeded(u64),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
