//! Dense square complex matrices with the tensor-product helpers used throughout:
//! Kronecker products, partial traces over a bipartite split, and commutators.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Which tensor factor of a bipartite operator an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Dense square complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    /// Identity matrix of the given dimension.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Build from a row-major closure over (row, col).
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Build from nested rows; panics unless the rows form a square matrix.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "rows must be square");
        Self::from_fn(dim, |i, j| rows[i][j])
    }

    /// Diagonal matrix with the given real entries.
    pub fn from_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, Complex64::new(d, 0.0));
        }
        m
    }

    /// Matrix dimension (the matrix is `dim x dim`).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at (row, col).
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    /// Overwrite the entry at (row, col).
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[i * self.dim + j] = value;
    }

    /// Row-major view of the raw entries.
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Entrywise sum; panics on dimension mismatch.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in add");
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Entrywise difference; panics on dimension mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in sub");
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|a| a * factor).collect(),
        }
    }

    /// Real scalar multiple.
    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Matrix product `self * other`; panics on dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in mul");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    /// Trace.
    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Hermitian part `(M + M^dag) / 2`; absorbs rounding drift before spectral calls.
    pub fn hermitize(&self) -> Self {
        Self::from_fn(self.dim, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        })
    }

    /// Frobenius norm `sqrt(sum |m_ij|^2)`.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius norm of `M - M^dag`, the Hermiticity residual.
    pub fn hermiticity_residual(&self) -> f64 {
        self.sub(&self.adjoint()).frobenius_norm()
    }

    /// Largest entrywise absolute difference to `other`; panics on dimension mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch in max_abs_diff");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Kronecker product; index convention `(i*dB + k, j*dB + l) = A_ij * B_kl`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim(), b.dim());
    ComplexMatrix::from_fn(da * db, |r, c| {
        a.get(r / db, c / db) * b.get(r % db, c % db)
    })
}

/// Partial trace of a `(d_a * d_b)`-dimensional operator over the discarded factor.
pub fn partial_trace(
    m: &ComplexMatrix,
    d_a: usize,
    d_b: usize,
    keep: Subsystem,
) -> Result<ComplexMatrix> {
    if m.dim() != d_a * d_b {
        return Err(Error::DimensionMismatch {
            left: m.dim(),
            right: d_a * d_b,
        });
    }
    let out = match keep {
        Subsystem::A => ComplexMatrix::from_fn(d_a, |i, j| {
            (0..d_b).map(|k| m.get(i * d_b + k, j * d_b + k)).sum()
        }),
        Subsystem::B => ComplexMatrix::from_fn(d_b, |k, l| {
            (0..d_a).map(|i| m.get(i * d_b + k, i * d_b + l)).sum()
        }),
    };
    Ok(out)
}

/// Commutator `[A, B] = AB - BA`.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(a.mul(b).sub(&b.mul(a)))
}
