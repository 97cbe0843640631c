//! Complex Hermitian eigendecomposition via cyclic Jacobi rotations.
//!
//! Each off-diagonal entry a_pq is annihilated by a unitary built from a phase
//! (absorbing arg a_pq) composed with a real Jacobi rotation; sweeps repeat until
//! the off-diagonal Frobenius mass falls below a threshold relative to ||M||_F.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Relative tolerance for the Hermiticity precondition `||M - M^dag||_F <= tol * max(1, ||M||_F)`.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Off-diagonal convergence threshold, relative to the Frobenius norm of the input.
pub const JACOBI_CONVERGENCE_FACTOR: f64 = 1e-14;
/// Sweep budget before the solver reports failure.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Spectral decomposition of a Hermitian matrix: `M = V diag(lambda) V^dag`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Real eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Unitary whose k-th column is the eigenvector for `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigen {
    /// Smallest eigenvalue.
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// Rebuild `V f(diag) V^dag` for real-valued `f` applied to the eigenvalues.
    pub fn rebuild(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut scaled = v.clone();
        for j in 0..n {
            let fj = Complex64::new(f(self.eigenvalues[j]), 0.0);
            for i in 0..n {
                scaled.set(i, j, v.get(i, j) * fj);
            }
        }
        scaled.mul(&v.adjoint()).hermitize()
    }
}

/// Check Hermiticity, then diagonalize `(M + M^dag)/2` with cyclic Jacobi sweeps.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<HermitianEigen> {
    hermitian_eig_with_budget(m, JACOBI_MAX_SWEEPS)
}

/// As [`hermitian_eig`] with an explicit sweep budget (exposed for convergence tests).
pub fn hermitian_eig_with_budget(m: &ComplexMatrix, max_sweeps: usize) -> Result<HermitianEigen> {
    let frob = m.frobenius_norm();
    let residual = m.hermiticity_residual();
    let tolerance = HERMITICITY_TOL * frob.max(1.0);
    if residual > tolerance {
        return Err(Error::NotHermitian {
            residual,
            tolerance,
        });
    }

    let n = m.dim();
    let mut a = m.hermitize();
    let mut v = ComplexMatrix::identity(n);
    let threshold = JACOBI_CONVERGENCE_FACTOR * frob;

    let mut off = off_diagonal_norm(&a);
    if off > threshold {
        let mut converged = false;
        // Skip rotations on entries too small to move the off-diagonal mass.
        let rotate_floor = threshold / ((n * n) as f64 + 1.0);
        for _ in 0..max_sweeps {
            for p in 0..n {
                for q in (p + 1)..n {
                    if a.get(p, q).norm() > rotate_floor {
                        rotate(&mut a, &mut v, p, q);
                    }
                }
            }
            off = off_diagonal_norm(&a);
            if off <= threshold {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence {
                sweeps: max_sweeps,
                off_diagonal: off,
            });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.total_cmp(&a.get(j, j).re));
    let eigenvalues = order.iter().map(|&i| a.get(i, i).re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| v.get(i, order[j]));
    Ok(HermitianEigen {
        eigenvalues,
        eigenvectors,
    })
}

/// sqrt of the off-diagonal squared mass of a Hermitian working matrix.
fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += 2.0 * a.get(p, q).norm_sqr();
        }
    }
    sum.sqrt()
}

/// Annihilate a_pq with the unitary R = diag(e^{i alpha}, 1) * [[c, s], [-s, c]]
/// acting on the (p, q) plane: A <- R^dag A R, V <- V R.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{i alpha}
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (tau - (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let rpp = phase * c;
    let rpq = phase * s;
    let rqp = Complex64::new(-s, 0.0);
    let rqq = Complex64::new(c, 0.0);

    let n = a.dim();
    // Rows: A <- R^dag A.
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, rpp.conj() * apk + rqp.conj() * aqk);
        a.set(q, k, rpq.conj() * apk + rqq.conj() * aqk);
    }
    // Columns: A <- A R, and accumulate V <- V R.
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * rpp + akq * rqp);
        a.set(k, q, akp * rpq + akq * rqq);

        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * rpp + vkq * rqp);
        v.set(k, q, vkp * rpq + vkq * rqq);
    }
    // The rotation zeroes (p, q) analytically; pin it and keep the diagonal real.
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    let dp = a.get(p, p).re;
    let dq = a.get(q, q).re;
    a.set(p, p, Complex64::new(dp, 0.0));
    a.set(q, q, Complex64::new(dq, 0.0));
}
