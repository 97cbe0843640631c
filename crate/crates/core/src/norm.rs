//! Schatten norms and the KMS inner product.
//!
//! Trace and operator norms go through the singular values of M, computed as the
//! square roots of the eigenvalues of M^dag M; no general SVD is needed.

use num_complex::Complex64;

use crate::eigen::hermitian_eig;
use crate::error::{Error, Result};
use crate::matfun::{matrix_fn, MatrixFunction};
use crate::matrix::ComplexMatrix;

/// Which norm [`norm`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    /// Schatten-1: sum of singular values.
    Trace,
    /// Schatten-infinity: largest singular value.
    Operator,
    /// Entrywise 2-norm.
    Frobenius,
}

/// Singular values of `m` in ascending order, via the spectrum of `M^dag M`.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let gram = m.adjoint().mul(m);
    let eig = hermitian_eig(&gram).expect("Gram matrix is Hermitian by construction");
    eig.eigenvalues
        .iter()
        .map(|&x| x.max(0.0).sqrt())
        .collect()
}

/// Evaluate the requested norm of `m`.
pub fn norm(m: &ComplexMatrix, which: Norm) -> f64 {
    match which {
        Norm::Frobenius => m.frobenius_norm(),
        Norm::Trace => singular_values(m).iter().sum(),
        Norm::Operator => singular_values(m).last().copied().unwrap_or(0.0),
    }
}

/// KMS inner product `<A, B>_rho = tr[A^dag rho^{1/2} B rho^{1/2}]` for positive
/// semidefinite `rho`.
pub fn kms_inner(a: &ComplexMatrix, b: &ComplexMatrix, rho: &ComplexMatrix) -> Result<Complex64> {
    if a.dim() != b.dim() || a.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: if a.dim() != b.dim() { b.dim() } else { rho.dim() },
        });
    }
    let root = matrix_fn(rho, MatrixFunction::Sqrt)?;
    Ok(a.adjoint().mul(&root).mul(b).mul(&root).trace())
}
