//! Closed-form spectra of weighted shift matrices and their polynomials.
//!
//! A weighted shift matrix U places weight u_i on row i, column
//! (i + s) mod m — a generalized permutation matrix over the cyclic shift.
//! Polynomials C = Σ_r c_r·U^r generalize circulant matrices (all-ones
//! weights, s = 1 recovers the classical case). This crate computes their
//! complete eigendecompositions in closed form, per structural case of
//! (s, m), and certifies the results against dense linear-algebra oracles
//! that never consult the closed forms.
//!
//! Module map:
//! - [`shift`]: the underlying permutation and its orbits;
//! - [`genperm`]: U itself — products along orbits, factored powers;
//! - [`circulant`]: polynomials in U — folding, dense assembly, traces;
//! - [`spectral`]: the closed-form eigendecompositions;
//! - [`oracle`]: independent verification (residuals, rank, traces);
//! - [`dense`]: the small dense complex-matrix toolkit the oracle uses;
//! - [`sample`]: seeded random instances for benches and test suites.

pub mod circulant;
pub mod dense;
pub mod error;
pub mod genperm;
pub mod oracle;
pub mod sample;
pub mod shift;
pub mod spectral;

pub use circulant::{horner, CirculantSpec, FoldedSpec};
pub use dense::DenseMatrix;
pub use error::{Error, Result};
pub use genperm::{GenPermMatrix, MatrixPower, OrbitProduct, PowerWeights};
pub use oracle::{
    diagonalization_check, residual_check, trace_identity_check, verify, DegenerateCheck,
    Tolerances, VerificationReport,
};
pub use sample::{random_coeffs, random_instance, random_weights, shift_for_case, SampleCase};
pub use shift::{Orbit, ShiftPermutation};
pub use spectral::{
    base_eigenvector_coprime, c_eigenvalues, c_eigenvalues_with_branch, case_for, decompose,
    eigenvectors_coprime, eigenvectors_divisor, eigenvectors_general_orbit, eigenvectors_s1,
    s2_closed_form, u_eigenvalues, u_eigenvalues_with_branch, BaseEigenvector, CaseTag,
    DegenerateInfo, DispatchPolicy, EigenPair, SpectralDecomposition, UEigenvalue,
};
