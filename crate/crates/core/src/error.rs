//! Error type shared by all modules.

/// Errors raised by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input matrix deviates from symmetry by more than the repairable bound.
    #[error("matrix is not symmetric: relative asymmetry {asymmetry:.3e} exceeds 1e-8")]
    Asymmetric { asymmetry: f64 },

    /// Matrix required to be positive semidefinite has a significantly
    /// negative eigenvalue.
    #[error("{dim}x{dim} matrix is not positive semidefinite: min eigenvalue {min_eig:.3e}")]
    NotPsd { min_eig: f64, dim: usize },

    /// The input matrix must be non-zero.
    #[error("input matrix must be non-zero")]
    ZeroMatrix,

    /// The iterative eigensolver hit its sweep cap.
    #[error("eigendecomposition did not converge for a {dim}x{dim} matrix")]
    EigNoConvergence { dim: usize },

    /// A semidefinite block violates its feasibility constraint.
    #[error("block {index}: constraint {constraint} violated by {violation:.3e}")]
    InfeasibleBlock {
        index: usize,
        constraint: &'static str,
        violation: f64,
    },

    /// Malformed or out-of-range input.
    #[error("{0}")]
    InvalidInput(String),

    /// An operation was called outside its stated domain.
    #[error("{0}")]
    PreconditionViolated(String),

    /// A size guard refused the computation.
    #[error("{what} exceeds guard: {actual} > {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

pub type Result<T> = core::result::Result<T, Error>;
