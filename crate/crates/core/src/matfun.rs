//! Spectral functions of Hermitian matrices: `f(M) = V f(diag) V^dag`.

use crate::eigen::hermitian_eig;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Eigenvalues at or below this floor make log/inv/negative powers singular.
pub const POSITIVITY_FLOOR: f64 = 1e-12;
/// Negative eigenvalues above `-SQRT_CLAMP` are treated as rounding noise and clamped to 0.
pub const SQRT_CLAMP: f64 = 1e-12;

/// Spectral function to apply to a Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixFunction {
    /// Natural logarithm; requires eigenvalues above the positivity floor.
    Log,
    /// Principal square root; clamps eigenvalues in `[-1e-12, 0)` to zero.
    Sqrt,
    /// Inverse; requires eigenvalues above the positivity floor.
    Inv,
    /// Exponential; defined for any Hermitian input.
    Exp,
    /// Real power `M^t`; negative `t` requires eigenvalues above the positivity floor.
    Pow(f64),
}

impl MatrixFunction {
    fn name(&self) -> &'static str {
        match self {
            MatrixFunction::Log => "log",
            MatrixFunction::Sqrt => "sqrt",
            MatrixFunction::Inv => "inv",
            MatrixFunction::Exp => "exp",
            MatrixFunction::Pow(_) => "pow",
        }
    }
}

/// Apply a spectral function; the result is re-Hermitized to absorb rounding drift.
pub fn matrix_fn(m: &ComplexMatrix, f: MatrixFunction) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(m)?;
    let min = eig.min_eigenvalue();
    let needs_positive = match f {
        MatrixFunction::Log | MatrixFunction::Inv => true,
        MatrixFunction::Pow(t) => t < 0.0,
        _ => false,
    };
    if needs_positive && min <= POSITIVITY_FLOOR {
        return Err(Error::SingularOperator {
            function: f.name(),
            eigenvalue: min,
            floor: POSITIVITY_FLOOR,
        });
    }
    // Nonnegative-power and sqrt inputs must be positive semidefinite up to rounding.
    let clamps_negative = match f {
        MatrixFunction::Sqrt => true,
        MatrixFunction::Pow(t) => t >= 0.0,
        _ => false,
    };
    if clamps_negative && min < -SQRT_CLAMP {
        return Err(Error::SingularOperator {
            function: f.name(),
            eigenvalue: min,
            floor: -SQRT_CLAMP,
        });
    }
    let out = eig.rebuild(|x| match f {
        MatrixFunction::Log => x.ln(),
        MatrixFunction::Sqrt => x.max(0.0).sqrt(),
        MatrixFunction::Inv => 1.0 / x,
        MatrixFunction::Exp => x.exp(),
        MatrixFunction::Pow(t) => {
            if t >= 0.0 {
                x.max(0.0).powf(t)
            } else {
                x.powf(t)
            }
        }
    });
    Ok(out)
}
