//! Error type shared across the library.

use thiserror::Error;

/// Errors reported by matrix kernels, state validation and divergence evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// Input violated the Hermiticity check `||M - M^dag||_F <= tol * max(1, ||M||_F)`.
    #[error("matrix is not Hermitian: residual {residual:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { residual: f64, tolerance: f64 },

    /// The Jacobi eigensolver exhausted its sweep budget before the off-diagonal
    /// mass fell under the convergence threshold.
    #[error("eigensolver did not converge in {sweeps} sweeps: off-diagonal norm {off_diagonal:.3e}")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    /// A spectral function that needs strictly positive eigenvalues met one at or
    /// below the positivity floor.
    #[error("operator is numerically singular for {function}: eigenvalue {eigenvalue:.3e} at floor {floor:.3e}")]
    SingularOperator {
        function: &'static str,
        eigenvalue: f64,
        floor: f64,
    },

    /// Operands have incompatible dimensions.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A candidate density matrix has an eigenvalue below the negativity tolerance.
    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:.3e}")]
    NotPositive { eigenvalue: f64 },

    /// A candidate density matrix does not have unit trace.
    #[error("trace is {trace} rather than 1")]
    TraceNotOne { trace: f64 },

    /// A state that must be invertible has its minimum eigenvalue at or below the
    /// full-rank threshold.
    #[error("state is not full rank: minimum eigenvalue {min_eigenvalue:.3e} <= {threshold:.3e}")]
    NotFullRank { min_eigenvalue: f64, threshold: f64 },

    /// A quasi-factorization hypothesis is violated, so the bound's factors are undefined.
    #[error("bound not applicable: hypothesis value {hypothesis:.6e} >= {bound:.6e}")]
    NotApplicable { hypothesis: f64, bound: f64 },

    /// State (de)serialization failed.
    #[error("state JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
