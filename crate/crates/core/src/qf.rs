//! Weak quasi-factorization of the BS-entropy: bounds of the form
//! `D_BS(rho||sigma) <= M * (D_BS_A + D_BS_B) + L` on a bipartite system, where
//! `D_BS_A`, `D_BS_B` are conditional BS-entropies, together with per-step
//! diagnostics for the inequality chain behind the bounds and the
//! superadditivity experiment they motivate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::divergence::{
    bs_entropy, conditional_bs, conditional_umegaki, umegaki, ILL_CONDITIONED_SIGMA_MIN,
};
use crate::eigen::{hermitian_eig, HERMITICITY_TOL};
use crate::error::{Error, Result};
use crate::matfun::{matrix_fn, MatrixFunction};
use crate::matrix::{commutator, kron, ComplexMatrix, Subsystem};
use crate::norm::{kms_inner, norm, Norm};
use crate::states::{BipartiteState, DensityMatrix, FULL_RANK_THRESHOLD};

/// Uniform slack for inequality assertions on systems of joint dimension <= 4.
pub const SLACK_TOL: f64 = 1e-9;

/// Slack for inequality assertions, scaled by dimension beyond 4.
pub fn slack_tol(dim: usize) -> f64 {
    if dim <= 4 {
        SLACK_TOL
    } else {
        SLACK_TOL * dim as f64
    }
}

/// Which quasi-factorization bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    /// Spectral-gap flavor: factors from `sigma_min` and `||sigma - sigma_A (x) sigma_B||_inf`.
    T1,
    /// H-operator flavor: factors from `||H(sigma)||_inf` and the eta operators.
    T2,
    /// Umegaki comparator with the H-operator multiplicative factor and no additive term.
    Umegaki,
}

impl std::fmt::Display for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Theorem::T1 => write!(f, "T1"),
            Theorem::T2 => write!(f, "T2"),
            Theorem::Umegaki => write!(f, "Umegaki"),
        }
    }
}

fn require_full_rank(state: &DensityMatrix) -> Result<()> {
    if !state.full_rank() {
        return Err(Error::NotFullRank {
            min_eigenvalue: state.min_eigenvalue(),
            threshold: FULL_RANK_THRESHOLD,
        });
    }
    Ok(())
}

fn check_bipartite_pair(s_rho: &BipartiteState, s_sigma: &BipartiteState) -> Result<()> {
    if s_rho.d_a() != s_sigma.d_a() || s_rho.d_b() != s_sigma.d_b() {
        return Err(Error::DimensionMismatch {
            left: s_rho.matrix().dim(),
            right: s_sigma.matrix().dim(),
        });
    }
    require_full_rank(s_rho.density())?;
    require_full_rank(s_sigma.density())
}

/// `H(sigma) = (sigma_A^{-1/2} (x) sigma_B^{-1/2}) sigma_AB (same) - 1`, the
/// multiplicative distance of `sigma_AB` from its product of marginals.
pub fn h_operator(s_sigma: &BipartiteState) -> Result<ComplexMatrix> {
    require_full_rank(s_sigma.density())?;
    let (sigma_a, sigma_b) = s_sigma.marginals()?;
    let sandwich = kron(
        &matrix_fn(sigma_a.matrix(), MatrixFunction::Pow(-0.5))?,
        &matrix_fn(sigma_b.matrix(), MatrixFunction::Pow(-0.5))?,
    );
    let n = s_sigma.matrix().dim();
    Ok(sandwich
        .mul(s_sigma.matrix())
        .mul(&sandwich)
        .sub(&ComplexMatrix::identity(n))
        .hermitize())
}

/// `eta = sigma^{1/2} rho^{1/2} sigma^{-1} rho^{1/2} sigma^{1/2}`; positive
/// semidefinite with `tr(eta) >= 1`, and equal to `rho` when the pair commutes.
pub fn eta_operator(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<ComplexMatrix> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    require_full_rank(sigma)?;
    let sigma_sqrt = matrix_fn(sigma.matrix(), MatrixFunction::Sqrt)?;
    let sigma_inv = matrix_fn(sigma.matrix(), MatrixFunction::Inv)?;
    let rho_sqrt = matrix_fn(rho.matrix(), MatrixFunction::Sqrt)?;
    Ok(sigma_sqrt
        .mul(&rho_sqrt)
        .mul(&sigma_inv)
        .mul(&rho_sqrt)
        .mul(&sigma_sqrt)
        .hermitize())
}

// ---------------------------------------------------------------------------
// Theorem factors
// ---------------------------------------------------------------------------

/// Factors of the first quasi-factorization bound.
#[derive(Debug, Clone)]
pub struct Theorem1Factors {
    /// Whether the hypothesis `||sigma - sigma_A (x) sigma_B||_inf * sigma_min^{-2} < d_A d_B / 2` holds.
    pub applicable: bool,
    /// `M = (1 - (2 sigma_min^{-2} / d_A d_B) ||sigma - sigma_A (x) sigma_B||_inf)^{-1}`, when applicable.
    pub multiplicative: Option<f64>,
    /// `L = M * (<sigma_A (x) sigma_B, sigma_A^{-1} (x) sigma_B^{-1}>_{rho_A (x) rho_B} - 1)`, when applicable.
    pub additive: Option<f64>,
    /// Hypothesis value `||sigma - sigma_A (x) sigma_B||_inf * sigma_min^{-2}`.
    pub hypothesis: f64,
    /// Hypothesis bound `d_A d_B / 2`.
    pub hypothesis_bound: f64,
    /// Minimum eigenvalue of `sigma_AB`.
    pub sigma_min: f64,
    /// `||sigma_AB - sigma_A (x) sigma_B||_inf`.
    pub deviation_norm: f64,
    /// KMS excess `<sigma_A (x) sigma_B, sigma_A^{-1} (x) sigma_B^{-1}>_{rho_A (x) rho_B} - 1`, nonnegative.
    pub kms_excess: f64,
}

impl Theorem1Factors {
    /// Factors `(M, L)`, or the NotApplicable error carrying the hypothesis excess.
    pub fn require(&self) -> Result<(f64, f64)> {
        match (self.multiplicative, self.additive) {
            (Some(m), Some(l)) => Ok((m, l)),
            _ => Err(Error::NotApplicable {
                hypothesis: self.hypothesis,
                bound: self.hypothesis_bound,
            }),
        }
    }
}

/// Evaluate the first bound's factors for a full-rank pair of bipartite states.
pub fn theorem1_factors(
    s_rho: &BipartiteState,
    s_sigma: &BipartiteState,
) -> Result<Theorem1Factors> {
    check_bipartite_pair(s_rho, s_sigma)?;
    let d_ab = (s_sigma.d_a() * s_sigma.d_b()) as f64;
    let sigma_min = s_sigma.density().min_eigenvalue();
    let (sigma_a, sigma_b) = s_sigma.marginals()?;
    let product = kron(sigma_a.matrix(), sigma_b.matrix());
    let deviation_norm = norm(&s_sigma.matrix().sub(&product), Norm::Operator);

    let hypothesis = deviation_norm / (sigma_min * sigma_min);
    let hypothesis_bound = d_ab / 2.0;
    let applicable = hypothesis < hypothesis_bound;

    let (rho_a, rho_b) = s_rho.marginals()?;
    let product_inv = kron(
        &matrix_fn(sigma_a.matrix(), MatrixFunction::Inv)?,
        &matrix_fn(sigma_b.matrix(), MatrixFunction::Inv)?,
    );
    let rho_product = kron(rho_a.matrix(), rho_b.matrix());
    let kms = kms_inner(&product, &product_inv, &rho_product)?;
    let kms_excess = kms.re - 1.0;

    let (multiplicative, additive) = if applicable {
        let m = 1.0 / (1.0 - 2.0 * hypothesis / d_ab);
        (Some(m), Some(m * kms_excess))
    } else {
        (None, None)
    };
    Ok(Theorem1Factors {
        applicable,
        multiplicative,
        additive,
        hypothesis,
        hypothesis_bound,
        sigma_min,
        deviation_norm,
        kms_excess,
    })
}

/// Factors of the second quasi-factorization bound.
#[derive(Debug, Clone)]
pub struct Theorem2Factors {
    /// Whether the hypothesis `||H(sigma)||_inf < 1/2` holds.
    pub applicable: bool,
    /// `M~ = (1 - 2 ||H||_inf)^{-1}`, when applicable.
    pub multiplicative: Option<f64>,
    /// `L~ = (1 + 2||H||) / (1 - 2||H||) * (dist_A dist_B + dist_A + dist_B)`, when applicable.
    pub additive: Option<f64>,
    /// `||H(sigma)||_inf`.
    pub h_norm: f64,
    /// `eta_A = sigma_A^{1/2} rho_A^{1/2} sigma_A^{-1} rho_A^{1/2} sigma_A^{1/2}`.
    pub eta_a: ComplexMatrix,
    /// Analog of `eta_a` on factor B.
    pub eta_b: ComplexMatrix,
    /// `||eta_A - rho_A||_1`.
    pub eta_a_dist: f64,
    /// `||eta_B - rho_B||_1`.
    pub eta_b_dist: f64,
}

impl Theorem2Factors {
    /// Factors `(M~, L~)`, or the NotApplicable error carrying `||H||_inf`.
    pub fn require(&self) -> Result<(f64, f64)> {
        match (self.multiplicative, self.additive) {
            (Some(m), Some(l)) => Ok((m, l)),
            _ => Err(Error::NotApplicable {
                hypothesis: self.h_norm,
                bound: 0.5,
            }),
        }
    }
}

/// Evaluate the second bound's factors for a full-rank pair of bipartite states.
pub fn theorem2_factors(
    s_rho: &BipartiteState,
    s_sigma: &BipartiteState,
) -> Result<Theorem2Factors> {
    check_bipartite_pair(s_rho, s_sigma)?;
    let h_norm = norm(&h_operator(s_sigma)?, Norm::Operator);
    let (rho_a, rho_b) = s_rho.marginals()?;
    let (sigma_a, sigma_b) = s_sigma.marginals()?;
    let eta_a = eta_operator(&rho_a, &sigma_a)?;
    let eta_b = eta_operator(&rho_b, &sigma_b)?;
    let eta_a_dist = norm(&eta_a.sub(rho_a.matrix()), Norm::Trace);
    let eta_b_dist = norm(&eta_b.sub(rho_b.matrix()), Norm::Trace);

    let applicable = h_norm < 0.5;
    let (multiplicative, additive) = if applicable {
        let m = 1.0 / (1.0 - 2.0 * h_norm);
        let l = (1.0 + 2.0 * h_norm) / (1.0 - 2.0 * h_norm)
            * (eta_a_dist * eta_b_dist + eta_a_dist + eta_b_dist);
        (Some(m), Some(l))
    } else {
        (None, None)
    };
    Ok(Theorem2Factors {
        applicable,
        multiplicative,
        additive,
        h_norm,
        eta_a,
        eta_b,
        eta_a_dist,
        eta_b_dist,
    })
}

// ---------------------------------------------------------------------------
// Bound evaluation
// ---------------------------------------------------------------------------

/// One evaluated quasi-factorization bound on a `(rho, sigma)` pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QFReport {
    /// Which bound was evaluated.
    pub theorem: Theorem,
    /// Whether the bound's hypothesis holds for this `sigma`.
    pub applicable: bool,
    /// Multiplicative factor, absent when not applicable.
    pub multiplicative: Option<f64>,
    /// Additive factor, absent when not applicable.
    pub additive: Option<f64>,
    /// Global divergence `D(rho_AB||sigma_AB)` for the theorem's divergence.
    pub lhs: f64,
    /// `multiplicative * (cond_a + cond_b) + additive`, absent when not applicable.
    pub rhs: Option<f64>,
    /// `rhs - lhs`; nonnegative when the bound holds.
    pub gap: Option<f64>,
    /// `||H(sigma)||_inf`.
    pub h_norm: f64,
    /// Minimum eigenvalue of `sigma_AB`.
    pub sigma_min: f64,
    /// Conditional divergence on A.
    pub cond_a: f64,
    /// Conditional divergence on B.
    pub cond_b: f64,
    /// Set when `sigma_min < 1e-6`; such T1 reports are excluded from sweep statistics.
    pub ill_conditioned: bool,
}

/// Evaluate one bound, returning a report even when the hypothesis fails
/// (then with `applicable = false` and the raw lhs/conditionals only).
pub fn evaluate_qf(
    s_rho: &BipartiteState,
    s_sigma: &BipartiteState,
    theorem: Theorem,
) -> Result<QFReport> {
    check_bipartite_pair(s_rho, s_sigma)?;
    let h_norm = norm(&h_operator(s_sigma)?, Norm::Operator);
    let sigma_min = s_sigma.density().min_eigenvalue();

    let (lhs, cond_a, cond_b) = match theorem {
        Theorem::T1 | Theorem::T2 => (
            bs_entropy(s_rho.density(), s_sigma.density())?.nats,
            conditional_bs(s_rho, s_sigma, Subsystem::A)?.nats,
            conditional_bs(s_rho, s_sigma, Subsystem::B)?.nats,
        ),
        Theorem::Umegaki => (
            umegaki(s_rho.density(), s_sigma.density())?.nats,
            conditional_umegaki(s_rho, s_sigma, Subsystem::A)?.nats,
            conditional_umegaki(s_rho, s_sigma, Subsystem::B)?.nats,
        ),
    };

    let (applicable, multiplicative, additive) = match theorem {
        Theorem::T1 => {
            let f = theorem1_factors(s_rho, s_sigma)?;
            (f.applicable, f.multiplicative, f.additive)
        }
        Theorem::T2 => {
            let f = theorem2_factors(s_rho, s_sigma)?;
            (f.applicable, f.multiplicative, f.additive)
        }
        Theorem::Umegaki => {
            if h_norm < 0.5 {
                (true, Some(1.0 / (1.0 - 2.0 * h_norm)), Some(0.0))
            } else {
                (false, None, None)
            }
        }
    };

    let rhs = multiplicative
        .zip(additive)
        .map(|(m, l)| m * (cond_a + cond_b) + l);
    let gap = rhs.map(|r| r - lhs);
    Ok(QFReport {
        theorem,
        applicable,
        multiplicative,
        additive,
        lhs,
        rhs,
        gap,
        h_norm,
        sigma_min,
        cond_a,
        cond_b,
        ill_conditioned: sigma_min < ILL_CONDITIONED_SIGMA_MIN,
    })
}

// ---------------------------------------------------------------------------
// Superadditivity experiment
// ---------------------------------------------------------------------------

/// The three BS-entropies entering the superadditivity comparison against a
/// product reference.
#[derive(Debug, Clone, Copy)]
pub struct SuperadditivityTerms {
    /// `D_BS(rho_AB || sigma_A (x) sigma_B)`.
    pub joint: f64,
    /// `D_BS(rho_A || sigma_A)`.
    pub marginal_a: f64,
    /// `D_BS(rho_B || sigma_B)`.
    pub marginal_b: f64,
}

impl SuperadditivityTerms {
    /// `joint - marginal_a - marginal_b`; negative values witness superadditivity failure.
    pub fn gap(&self) -> f64 {
        self.joint - self.marginal_a - self.marginal_b
    }
}

/// Evaluate the superadditivity terms for `rho_AB` against `sigma_A (x) sigma_B`.
pub fn superadditivity_terms(
    s_rho: &BipartiteState,
    sigma_a: &DensityMatrix,
    sigma_b: &DensityMatrix,
) -> Result<SuperadditivityTerms> {
    if sigma_a.dim() != s_rho.d_a() || sigma_b.dim() != s_rho.d_b() {
        return Err(Error::DimensionMismatch {
            left: sigma_a.dim() * sigma_b.dim(),
            right: s_rho.matrix().dim(),
        });
    }
    let sigma_product = sigma_a.tensor(sigma_b);
    let (rho_a, rho_b) = s_rho.marginals()?;
    Ok(SuperadditivityTerms {
        joint: bs_entropy(s_rho.density(), &sigma_product)?.nats,
        marginal_a: bs_entropy(&rho_a, sigma_a)?.nats,
        marginal_b: bs_entropy(&rho_b, sigma_b)?.nats,
    })
}

/// `D_BS(rho_AB||sigma_A (x) sigma_B) - D_BS(rho_A||sigma_A) - D_BS(rho_B||sigma_B)`.
pub fn superadditivity_gap(
    s_rho: &BipartiteState,
    sigma_a: &DensityMatrix,
    sigma_b: &DensityMatrix,
) -> Result<f64> {
    Ok(superadditivity_terms(s_rho, sigma_a, sigma_b)?.gap())
}

// ---------------------------------------------------------------------------
// Proof-step diagnostics
// ---------------------------------------------------------------------------

/// Every labeled intermediate of the inequality chain behind the bounds.
///
/// With `dev_X = rho_X^{1/2} (sigma_X^{-1} - rho_X^{-1}) rho_X^{1/2}`:
/// `y_ab = tr[sigma_AB dev_A (x) dev_B]`, `z_ab` replaces `sigma_AB` by
/// `sigma_AB - sigma_A (x) sigma_B`, and `x_a`, `x_b` are the eta traces.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepDiagnostics {
    /// Additivity defect `D_BS(rho_A||sigma_A) + D_BS(rho_B||sigma_B) - D_BS(rho_AB||sigma_AB)`.
    pub bs_gap: f64,
    /// `log tr[sigma_AB (rho_A (x) rho_B)^{1/2} (sigma_A (x) sigma_B)^{-1} (rho_A (x) rho_B)^{1/2}]`.
    pub step1_rhs: f64,
    /// `tr[sigma_AB dev_A (x) dev_B]`.
    pub y_ab: f64,
    /// `tr[sigma_A rho_A^{1/2} sigma_A^{-1} rho_A^{1/2}]`.
    pub x_a: f64,
    /// `tr[sigma_B rho_B^{1/2} sigma_B^{-1} rho_B^{1/2}]`.
    pub x_b: f64,
    /// `tr[(sigma_AB - sigma_A (x) sigma_B) dev_A (x) dev_B]`.
    pub z_ab: f64,
    /// `z_ab + x_a * x_b - 1`.
    pub step2_rhs: f64,
    /// `(2 sigma_min^{-2} / d_A d_B) ||sigma_AB - sigma_A (x) sigma_B||_inf * D_BS(rho_AB||sigma_AB)`.
    pub step3_rhs: f64,
    /// `2||H|| D_BS(rho_AB||sigma_AB) + (1 + 2||H||)(dist_A dist_B + dist_A + dist_B)`.
    pub step3bis_rhs: f64,
    /// `||eta_A - rho_A||_1`.
    pub eta_a_dist: f64,
    /// `||eta_B - rho_B||_1`.
    pub eta_b_dist: f64,
}

impl StepDiagnostics {
    /// Names of the chain relations violated beyond `tol`; empty when all hold.
    pub fn check(&self, tol: f64) -> Vec<&'static str> {
        let mut violated = Vec::new();
        if self.bs_gap > self.step1_rhs + tol {
            violated.push("step1");
        }
        if self.step1_rhs > self.step2_rhs + tol {
            violated.push("step2");
        }
        if (self.step2_rhs - (self.y_ab + self.x_a + self.x_b - 2.0)).abs() > tol {
            violated.push("step2_identity");
        }
        if self.z_ab > self.step3_rhs + tol {
            violated.push("step3");
        }
        if self.z_ab + self.x_a * self.x_b - 1.0 > self.step3bis_rhs + tol {
            violated.push("step3bis");
        }
        violated
    }
}

/// Compute every intermediate of the proof chain for a full-rank pair.
pub fn step_diagnostics(
    s_rho: &BipartiteState,
    s_sigma: &BipartiteState,
) -> Result<StepDiagnostics> {
    check_bipartite_pair(s_rho, s_sigma)?;
    let d_ab = (s_rho.d_a() * s_rho.d_b()) as f64;
    let (rho_a, rho_b) = s_rho.marginals()?;
    let (sigma_a, sigma_b) = s_sigma.marginals()?;

    let rho_a_sqrt = matrix_fn(rho_a.matrix(), MatrixFunction::Sqrt)?;
    let rho_b_sqrt = matrix_fn(rho_b.matrix(), MatrixFunction::Sqrt)?;
    let sigma_a_inv = matrix_fn(sigma_a.matrix(), MatrixFunction::Inv)?;
    let sigma_b_inv = matrix_fn(sigma_b.matrix(), MatrixFunction::Inv)?;
    let rho_a_inv = matrix_fn(rho_a.matrix(), MatrixFunction::Inv)?;
    let rho_b_inv = matrix_fn(rho_b.matrix(), MatrixFunction::Inv)?;

    // f_X = rho_X^{1/2} sigma_X^{-1} rho_X^{1/2} and its deviation from 1.
    let f_a = rho_a_sqrt.mul(&sigma_a_inv).mul(&rho_a_sqrt).hermitize();
    let f_b = rho_b_sqrt.mul(&sigma_b_inv).mul(&rho_b_sqrt).hermitize();
    let dev_a = rho_a_sqrt
        .mul(&sigma_a_inv.sub(&rho_a_inv))
        .mul(&rho_a_sqrt)
        .hermitize();
    let dev_b = rho_b_sqrt
        .mul(&sigma_b_inv.sub(&rho_b_inv))
        .mul(&rho_b_sqrt)
        .hermitize();

    let x_a = sigma_a.matrix().mul(&f_a).trace().re;
    let x_b = sigma_b.matrix().mul(&f_b).trace().re;
    let dev_product = kron(&dev_a, &dev_b);
    let y_ab = s_sigma.matrix().mul(&dev_product).trace().re;
    let sigma_product = kron(sigma_a.matrix(), sigma_b.matrix());
    let z_ab = s_sigma
        .matrix()
        .sub(&sigma_product)
        .mul(&dev_product)
        .trace()
        .re;

    let step1_rhs = s_sigma
        .matrix()
        .mul(&kron(&f_a, &f_b))
        .trace()
        .re
        .ln();
    let step2_rhs = z_ab + x_a * x_b - 1.0;

    let bs_global = bs_entropy(s_rho.density(), s_sigma.density())?.nats;
    let bs_a = bs_entropy(&rho_a, &sigma_a)?.nats;
    let bs_b = bs_entropy(&rho_b, &sigma_b)?.nats;
    let bs_gap = bs_a + bs_b - bs_global;

    let sigma_min = s_sigma.density().min_eigenvalue();
    let deviation_norm = norm(&s_sigma.matrix().sub(&sigma_product), Norm::Operator);
    let step3_rhs = 2.0 / (d_ab * sigma_min * sigma_min) * deviation_norm * bs_global;

    let h_norm = norm(&h_operator(s_sigma)?, Norm::Operator);
    let eta_a = eta_operator(&rho_a, &sigma_a)?;
    let eta_b = eta_operator(&rho_b, &sigma_b)?;
    let eta_a_dist = norm(&eta_a.sub(rho_a.matrix()), Norm::Trace);
    let eta_b_dist = norm(&eta_b.sub(rho_b.matrix()), Norm::Trace);
    let step3bis_rhs = 2.0 * h_norm * bs_global
        + (1.0 + 2.0 * h_norm) * (eta_a_dist * eta_b_dist + eta_a_dist + eta_b_dist);

    Ok(StepDiagnostics {
        bs_gap,
        step1_rhs,
        y_ab,
        x_a,
        x_b,
        z_ab,
        step2_rhs,
        step3_rhs,
        step3bis_rhs,
        eta_a_dist,
        eta_b_dist,
    })
}

// ---------------------------------------------------------------------------
// Supporting inequalities
// ---------------------------------------------------------------------------

/// Golden-Thompson pair `(tr e^{X+Y}, tr e^X e^Y)` for Hermitian `X`, `Y`;
/// the first never exceeds the second.
pub fn golden_thompson_check(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<(f64, f64)> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    for m in [x, y] {
        let residual = m.hermiticity_residual();
        let tolerance = HERMITICITY_TOL * m.frobenius_norm().max(1.0);
        if residual > tolerance {
            return Err(Error::NotHermitian {
                residual,
                tolerance,
            });
        }
    }
    let lhs = matrix_fn(&x.add(y), MatrixFunction::Exp)?.trace().re;
    let rhs = matrix_fn(x, MatrixFunction::Exp)?
        .mul(&matrix_fn(y, MatrixFunction::Exp)?)
        .trace()
        .re;
    Ok((lhs, rhs))
}

/// The commutator remark: `||eta - rho||_1 <= ||K||_inf^2 + 2 ||K||_inf` with
/// `K = [rho^{1/2}, sigma^{-1/2}]`. Returns `(distance, bound)`; the operator
/// norm of the skew-Hermitian `K` is the spectral radius of the Hermitian `iK`.
pub fn commutator_bound(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<(f64, f64)> {
    let eta = eta_operator(rho, sigma)?;
    let distance = norm(&eta.sub(rho.matrix()), Norm::Trace);
    let rho_sqrt = matrix_fn(rho.matrix(), MatrixFunction::Sqrt)?;
    let sigma_inv_sqrt = matrix_fn(sigma.matrix(), MatrixFunction::Pow(-0.5))?;
    let k = commutator(&rho_sqrt, &sigma_inv_sqrt)?;
    let ik = k.scale(Complex64::new(0.0, 1.0)).hermitize();
    let k_norm = hermitian_eig(&ik)?
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, &x| acc.max(x.abs()));
    Ok((distance, k_norm * k_norm + 2.0 * k_norm))
}
