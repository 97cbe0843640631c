//! Quantum relative entropies in nats: the Umegaki divergence
//! `D(rho||sigma) = tr[rho (log rho - log sigma)]` and the Belavkin-Staszewski
//! divergence `D_BS(rho||sigma) = tr[rho log(rho^{1/2} sigma^{-1} rho^{1/2})]`,
//! plus their conditional versions on a bipartite split.

use crate::eigen::hermitian_eig;
use crate::error::{Error, Result};
use crate::matfun::{matrix_fn, MatrixFunction};
use crate::states::{BipartiteState, DensityMatrix, FULL_RANK_THRESHOLD};
use crate::matrix::Subsystem;

/// Below this minimum eigenvalue of the reference state, results carry a
/// conditioning warning.
pub const ILL_CONDITIONED_SIGMA_MIN: f64 = 1e-6;

/// A divergence value in nats, with a conditioning flag for near-singular references.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivergenceValue {
    /// The divergence in nats.
    pub nats: f64,
    /// Set when the reference state's minimum eigenvalue is below 1e-6.
    pub ill_conditioned: bool,
}

fn check_pair(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<()> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    for state in [rho, sigma] {
        if !state.full_rank() {
            return Err(Error::NotFullRank {
                min_eigenvalue: state.min_eigenvalue(),
                threshold: FULL_RANK_THRESHOLD,
            });
        }
    }
    Ok(())
}

/// Umegaki relative entropy `tr[rho (log rho - log sigma)]` for full-rank states.
pub fn umegaki(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<DivergenceValue> {
    check_pair(rho, sigma)?;
    // tr[rho log rho] directly from the spectrum of rho.
    let rho_eig = hermitian_eig(rho.matrix())?;
    let entropy_term: f64 = rho_eig
        .eigenvalues
        .iter()
        .map(|&x| if x > 0.0 { x * x.ln() } else { 0.0 })
        .sum();
    let log_sigma = matrix_fn(sigma.matrix(), MatrixFunction::Log)?;
    let cross_term = rho.matrix().mul(&log_sigma).trace().re;
    Ok(DivergenceValue {
        nats: entropy_term - cross_term,
        ill_conditioned: sigma.min_eigenvalue() < ILL_CONDITIONED_SIGMA_MIN,
    })
}

/// Belavkin-Staszewski relative entropy `tr[rho log(rho^{1/2} sigma^{-1} rho^{1/2})]`
/// for full-rank states; the inner operator is Hermitized before the spectral log.
pub fn bs_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<DivergenceValue> {
    check_pair(rho, sigma)?;
    let rho_sqrt = matrix_fn(rho.matrix(), MatrixFunction::Sqrt)?;
    let sigma_inv = matrix_fn(sigma.matrix(), MatrixFunction::Inv)?;
    let inner = rho_sqrt.mul(&sigma_inv).mul(&rho_sqrt).hermitize();
    let log_inner = matrix_fn(&inner, MatrixFunction::Log)?;
    Ok(DivergenceValue {
        nats: rho.matrix().mul(&log_inner).trace().re,
        ill_conditioned: sigma.min_eigenvalue() < ILL_CONDITIONED_SIGMA_MIN,
    })
}

fn conditional(
    s_rho: &BipartiteState,
    s_sigma: &BipartiteState,
    cond_on: Subsystem,
    div: fn(&DensityMatrix, &DensityMatrix) -> Result<DivergenceValue>,
) -> Result<DivergenceValue> {
    if s_rho.d_a() != s_sigma.d_a() || s_rho.d_b() != s_sigma.d_b() {
        return Err(Error::DimensionMismatch {
            left: s_rho.matrix().dim(),
            right: s_sigma.matrix().dim(),
        });
    }
    let global = div(s_rho.density(), s_sigma.density())?;
    let (rho_a, rho_b) = s_rho.marginals()?;
    let (sigma_a, sigma_b) = s_sigma.marginals()?;
    // Conditioning on a subsystem subtracts the divergence of the complement marginal.
    let reduced = match cond_on {
        Subsystem::A => div(&rho_b, &sigma_b)?,
        Subsystem::B => div(&rho_a, &sigma_a)?,
    };
    Ok(DivergenceValue {
        nats: global.nats - reduced.nats,
        ill_conditioned: global.ill_conditioned || reduced.ill_conditioned,
    })
}

/// Conditional Umegaki divergence `D_X(rho||sigma) = D(rho||sigma) - D(rho_Y||sigma_Y)`
/// where `Y` is the complement of the conditioning subsystem `X`.
pub fn conditional_umegaki(
    s_rho: &BipartiteState,
    s_sigma: &BipartiteState,
    cond_on: Subsystem,
) -> Result<DivergenceValue> {
    conditional(s_rho, s_sigma, cond_on, umegaki)
}

/// Conditional Belavkin-Staszewski divergence, same shape as [`conditional_umegaki`].
pub fn conditional_bs(
    s_rho: &BipartiteState,
    s_sigma: &BipartiteState,
    cond_on: Subsystem,
) -> Result<DivergenceValue> {
    conditional(s_rho, s_sigma, cond_on, bs_entropy)
}
