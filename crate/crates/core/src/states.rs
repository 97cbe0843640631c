//! Density matrices and bipartite states: validation, Hilbert-Schmidt sampling,
//! the Werner family, perturbed product states, and JSON (de)serialization.

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::eigen::hermitian_eig;
use crate::error::{Error, Result};
use crate::matrix::{kron, partial_trace, ComplexMatrix, Subsystem};

/// Absolute tolerance for the Hermiticity, positivity and unit-trace checks.
pub const DENSITY_TOL: f64 = 1e-10;
/// A state is full rank when its minimum eigenvalue exceeds this threshold.
pub const FULL_RANK_THRESHOLD: f64 = 1e-8;
/// Resample budget before Hilbert-Schmidt sampling gives up on full rank.
pub const MAX_RESAMPLES: usize = 100;

/// Validated density matrix with its cached minimum eigenvalue.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    min_eigenvalue: f64,
}

impl DensityMatrix {
    /// Validate Hermiticity, positivity and unit trace; optionally require full rank.
    pub fn validate(matrix: &ComplexMatrix, require_full_rank: bool) -> Result<Self> {
        let residual = matrix.hermiticity_residual();
        let tolerance = DENSITY_TOL * matrix.frobenius_norm().max(1.0);
        if residual > tolerance {
            return Err(Error::NotHermitian {
                residual,
                tolerance,
            });
        }
        let hermitized = matrix.hermitize();
        let eig = hermitian_eig(&hermitized)?;
        let min_eigenvalue = eig.min_eigenvalue();
        if min_eigenvalue < -DENSITY_TOL {
            return Err(Error::NotPositive {
                eigenvalue: min_eigenvalue,
            });
        }
        let trace = hermitized.trace().re;
        if (trace - 1.0).abs() > DENSITY_TOL {
            return Err(Error::TraceNotOne { trace });
        }
        if require_full_rank && min_eigenvalue <= FULL_RANK_THRESHOLD {
            return Err(Error::NotFullRank {
                min_eigenvalue,
                threshold: FULL_RANK_THRESHOLD,
            });
        }
        Ok(Self {
            matrix: hermitized,
            min_eigenvalue,
        })
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Cached minimum eigenvalue.
    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }

    /// Whether the state counts as full rank.
    pub fn full_rank(&self) -> bool {
        self.min_eigenvalue > FULL_RANK_THRESHOLD
    }

    /// Tensor product of two validated states; the minimum eigenvalue multiplies.
    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            matrix: kron(&self.matrix, &other.matrix),
            min_eigenvalue: self.min_eigenvalue * other.min_eigenvalue,
        }
    }
}

/// Bipartite density matrix on `C^{d_a} (x) C^{d_b}`.
#[derive(Debug, Clone)]
pub struct BipartiteState {
    state: DensityMatrix,
    d_a: usize,
    d_b: usize,
}

impl BipartiteState {
    /// Wrap a validated density matrix; its dimension must equal `d_a * d_b`.
    pub fn new(state: DensityMatrix, d_a: usize, d_b: usize) -> Result<Self> {
        if state.dim() != d_a * d_b {
            return Err(Error::DimensionMismatch {
                left: state.dim(),
                right: d_a * d_b,
            });
        }
        Ok(Self { state, d_a, d_b })
    }

    /// The joint state.
    pub fn density(&self) -> &DensityMatrix {
        &self.state
    }

    /// The joint matrix.
    pub fn matrix(&self) -> &ComplexMatrix {
        self.state.matrix()
    }

    /// Dimension of factor A.
    pub fn d_a(&self) -> usize {
        self.d_a
    }

    /// Dimension of factor B.
    pub fn d_b(&self) -> usize {
        self.d_b
    }

    /// Both reduced states `(tr_B, tr_A)`, validated.
    pub fn marginals(&self) -> Result<(DensityMatrix, DensityMatrix)> {
        let a = partial_trace(self.matrix(), self.d_a, self.d_b, Subsystem::A)?;
        let b = partial_trace(self.matrix(), self.d_a, self.d_b, Subsystem::B)?;
        Ok((
            DensityMatrix::validate(&a, false)?,
            DensityMatrix::validate(&b, false)?,
        ))
    }

    /// Serialize to the interchange JSON schema (row-major re/im parts).
    pub fn to_json(&self) -> String {
        let n = self.state.dim();
        let m = self.matrix();
        let component = |f: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
            (0..n)
                .map(|i| (0..n).map(|j| f(&m.get(i, j))).collect())
                .collect()
        };
        let wire = StateJson {
            d_a: self.d_a,
            d_b: self.d_b,
            re: component(|z| z.re),
            im: component(|z| z.im),
        };
        serde_json::to_string(&wire).expect("state serialization cannot fail")
    }

    /// Parse and revalidate a state from the interchange JSON schema.
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: StateJson = serde_json::from_str(text)?;
        let n = wire.d_a * wire.d_b;
        if wire.re.len() != n
            || wire.im.len() != n
            || wire.re.iter().any(|r| r.len() != n)
            || wire.im.iter().any(|r| r.len() != n)
        {
            return Err(Error::DimensionMismatch {
                left: wire.re.len(),
                right: n,
            });
        }
        let m = ComplexMatrix::from_fn(n, |i, j| Complex64::new(wire.re[i][j], wire.im[i][j]));
        Self::new(DensityMatrix::validate(&m, false)?, wire.d_a, wire.d_b)
    }
}

/// Wire form of a bipartite state.
#[derive(Serialize, Deserialize)]
struct StateJson {
    d_a: usize,
    d_b: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Deterministic RNG for a (seed, stream) pair; each sample index gets its own stream.
pub fn sample_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard complex Gaussian via Box-Muller from two uniform draws.
pub fn standard_complex<R: RngCore>(rng: &mut R) -> Complex64 {
    // u1 in (0, 1] so ln is finite; u2 in [0, 1).
    let u1 = ((rng.next_u64() >> 11) + 1) as f64 / (1u64 << 53) as f64;
    let u2 = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    let r = (-2.0 * u1.ln()).sqrt();
    let theta = 2.0 * std::f64::consts::PI * u2;
    Complex64::new(r * theta.cos(), r * theta.sin())
}

/// Square Ginibre matrix with i.i.d. standard complex Gaussian entries.
fn ginibre<R: RngCore>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let mut g = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            g.set(i, j, standard_complex(rng));
        }
    }
    g
}

/// Hilbert-Schmidt random density matrix `G G^dag / tr(G G^dag)`, resampled until
/// full rank (up to the resample budget).
pub fn sample_ginibre_density<R: RngCore>(dim: usize, rng: &mut R) -> Result<DensityMatrix> {
    let mut last_min = f64::NEG_INFINITY;
    for _ in 0..MAX_RESAMPLES {
        let g = ginibre(dim, rng);
        let p = g.mul(&g.adjoint());
        let trace = p.trace().re;
        if trace <= 0.0 {
            continue;
        }
        let candidate = DensityMatrix::validate(&p.scale_re(1.0 / trace), false)?;
        if candidate.full_rank() {
            return Ok(candidate);
        }
        last_min = candidate.min_eigenvalue();
    }
    Err(Error::NotFullRank {
        min_eigenvalue: last_min,
        threshold: FULL_RANK_THRESHOLD,
    })
}

/// Hilbert-Schmidt random bipartite state of joint dimension `d_a * d_b`.
pub fn sample_bipartite_ginibre<R: RngCore>(
    d_a: usize,
    d_b: usize,
    rng: &mut R,
) -> Result<BipartiteState> {
    BipartiteState::new(sample_ginibre_density(d_a * d_b, rng)?, d_a, d_b)
}

/// Normalized perturbation of a product state:
/// `(eta_a (x) eta_b + epsilon * lambda) / tr[...]`.
pub fn perturbed_product(
    eta_a: &DensityMatrix,
    eta_b: &DensityMatrix,
    lambda: &BipartiteState,
    epsilon: f64,
) -> Result<BipartiteState> {
    assert!(epsilon >= 0.0, "perturbation strength must be nonnegative");
    let (d_a, d_b) = (eta_a.dim(), eta_b.dim());
    if lambda.d_a() != d_a || lambda.d_b() != d_b {
        return Err(Error::DimensionMismatch {
            left: lambda.d_a() * lambda.d_b(),
            right: d_a * d_b,
        });
    }
    let raw = kron(eta_a.matrix(), eta_b.matrix()).add(&lambda.matrix().scale_re(epsilon));
    let normalized = raw.scale_re(1.0 / raw.trace().re);
    BipartiteState::new(DensityMatrix::validate(&normalized, false)?, d_a, d_b)
}

/// Werner state `p * Phi + (1 - p) * I/4` with `Phi` the maximally entangled
/// two-qubit projector; valid for `p` in `[0, 1]`.
pub fn werner_state(p: f64) -> Result<BipartiteState> {
    assert!((0.0..=1.0).contains(&p), "Werner parameter must be in [0, 1]");
    let mut phi = ComplexMatrix::zeros(4);
    for &i in &[0usize, 3] {
        for &j in &[0usize, 3] {
            phi.set(i, j, Complex64::new(0.5, 0.0));
        }
    }
    let m = phi
        .scale_re(p)
        .add(&ComplexMatrix::identity(4).scale_re((1.0 - p) / 4.0));
    BipartiteState::new(DensityMatrix::validate(&m, false)?, 2, 2)
}
