//! Numerical laboratory for the Belavkin-Staszewski (BS) relative entropy.
//!
//! The crate computes quantum divergences on finite-dimensional bipartite
//! states and verifies weak quasi-factorization bounds for the BS-entropy,
//! including every intermediate inequality of their derivations. Everything is
//! built on a self-contained dense complex Hermitian linear algebra kernel
//! (cyclic Jacobi eigensolver, spectral matrix functions, Schatten norms); all
//! divergences are reported in nats.
//!
//! Module map:
//! - [`matrix`]: dense complex matrices, Kronecker products, partial traces,
//!   commutators.
//! - [`eigen`]: complex Hermitian eigendecomposition.
//! - [`matfun`]: spectral functions (log, sqrt, inv, exp, powers).
//! - [`norm`]: trace/operator/Frobenius norms and the KMS inner product.
//! - [`states`]: density-matrix validation, Hilbert-Schmidt sampling, perturbed
//!   product states, JSON interchange.
//! - [`divergence`]: Umegaki and BS relative entropies, conditional versions.
//! - [`qf`]: the two quasi-factorization bounds, their proof-step diagnostics,
//!   the superadditivity experiment, Golden-Thompson and commutator checks.

pub mod divergence;
pub mod eigen;
pub mod error;
pub mod matfun;
pub mod matrix;
pub mod norm;
pub mod qf;
pub mod states;

pub use divergence::{
    bs_entropy, conditional_bs, conditional_umegaki, umegaki, DivergenceValue,
};
pub use eigen::{hermitian_eig, HermitianEigen};
pub use error::{Error, Result};
pub use matfun::{matrix_fn, MatrixFunction};
pub use matrix::{commutator, kron, partial_trace, ComplexMatrix, Subsystem};
pub use norm::{kms_inner, norm, Norm};
pub use qf::{
    evaluate_qf, golden_thompson_check, h_operator, step_diagnostics, superadditivity_gap,
    superadditivity_terms, theorem1_factors, theorem2_factors, QFReport, StepDiagnostics,
    Theorem,
};
pub use states::{
    perturbed_product, sample_bipartite_ginibre, sample_ginibre_density, sample_rng,
    werner_state, BipartiteState, DensityMatrix,
};
pub use num_complex::Complex64;
pub use rand_chacha::rand_core::RngCore;
pub use rand_chacha::ChaCha8Rng;

/// Library version, echoed into experiment reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
