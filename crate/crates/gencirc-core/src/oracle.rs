//! Independent verification of candidate eigendecompositions.
//!
//! Nothing here consults the closed-form constructions: the inputs are the
//! dense matrix (assembled by the polynomial layer from the sparse power
//! structure), the candidate pairs, and plain Gaussian elimination. A
//! decomposition passes when every eigenpair has a small relative residual,
//! the eigenvector matrix has full rank, conjugating by it actually
//! diagonalizes the matrix, and the eigenvalue power sums reproduce the
//! traces of C, C², C³.

use num_complex::Complex64;

use crate::circulant::CirculantSpec;
use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::genperm::cpow;
use crate::spectral::SpectralDecomposition;

/// Thresholds used by [`verify`]. `rank_pivot_floor` is relative: the
/// elimination treats a pivot as zero when its modulus falls below
/// `rank_pivot_floor · ‖T‖_F`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub residual: f64,
    pub rank_pivot_floor: f64,
    pub diag_offdiag: f64,
    pub trace: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual: 1e-9,
            rank_pivot_floor: 1e-10,
            diag_offdiag: 1e-10,
            trace: 1e-8,
        }
    }
}

/// Rank/nullity bookkeeping for the zero-weight route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegenerateCheck {
    /// Number of explicit eigenvectors the decomposition supplied.
    pub geometric_basis_size: usize,
    /// m − rank(C − c_0·I), measured by elimination on the dense matrix.
    pub nullity: usize,
    /// Multiplicity claimed by the decomposition.
    pub algebraic_multiplicity: usize,
}

/// Outcome of [`verify`]: the measured figures plus the verdict. For the
/// degenerate route the diagonalization norm is absent (the basis is
/// rectangular) and the trace deltas are only present when the eigenvalue
/// c_0 accounts for the whole spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub max_relative_residual: f64,
    pub rank: usize,
    pub rank_verdict: bool,
    pub diagonalization_offdiag_norm: Option<f64>,
    pub trace_deltas: Option<[f64; 3]>,
    pub degenerate: Option<DegenerateCheck>,
    pub tolerances: Tolerances,
    pub passed: bool,
}

fn vector_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest relative residual ‖M·v − λ·v‖₂ / (‖M‖_F · ‖v‖₂) over the pairs.
/// Invariant under rescaling any eigenvector.
pub fn residual_check(dense: &DenseMatrix, decomp: &SpectralDecomposition) -> Result<f64> {
    let m = dense.rows();
    if !dense.is_square() {
        return Err(Error::ShapeMismatch {
            rows: dense.rows(),
            cols: dense.cols(),
            expected_rows: m,
            expected_cols: m,
        });
    }
    let norm = dense.frobenius_norm().max(f64::MIN_POSITIVE);
    let mut worst = 0.0f64;
    for pair in &decomp.pairs {
        if pair.vector.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                actual: pair.vector.len(),
            });
        }
        let vnorm = vector_norm(&pair.vector);
        if vnorm == 0.0 {
            return Ok(f64::INFINITY); // a zero vector can never certify anything
        }
        let mv = dense.matvec(&pair.vector)?;
        let mut diff = 0.0f64;
        for (a, b) in mv.iter().zip(&pair.vector) {
            diff += (a - pair.value * b).norm_sqr();
        }
        worst = worst.max(diff.sqrt() / (norm * vnorm));
    }
    Ok(worst)
}

/// Solves T·X = M·T and returns ‖offdiag(X)‖_F / ‖M‖_F; for a genuine
/// eigenvector matrix X is the diagonal of eigenvalues. Fails with
/// `SingularMatrix` when elimination hits a pivot at or below `pivot_floor`.
pub fn diagonalization_check(
    dense: &DenseMatrix,
    t: &DenseMatrix,
    pivot_floor: f64,
) -> Result<f64> {
    if !t.is_square() || t.rows() != dense.rows() {
        return Err(Error::ShapeMismatch {
            rows: t.rows(),
            cols: t.cols(),
            expected_rows: dense.rows(),
            expected_cols: dense.rows(),
        });
    }
    let mt = dense.mul(t)?;
    let x = t.solve_matrix(&mt, pivot_floor)?;
    Ok(x.offdiagonal_norm() / dense.frobenius_norm().max(f64::MIN_POSITIVE))
}

/// Compares Σ_j λ_j^p against tr(C^p) for p = 1, 2, 3, relative to
/// max(1, |tr(C^p)|). The decomposition must carry all m pairs.
pub fn trace_identity_check(
    spec: &CirculantSpec,
    decomp: &SpectralDecomposition,
) -> Result<[f64; 3]> {
    if decomp.pairs.len() != spec.size() {
        return Err(Error::LengthMismatch {
            expected: spec.size(),
            actual: decomp.pairs.len(),
        });
    }
    let mut deltas = [0.0f64; 3];
    for (slot, p) in (1usize..=3).enumerate() {
        let trace = spec.trace_power(p)?;
        let mut sum = Complex64::new(0.0, 0.0);
        for pair in &decomp.pairs {
            sum += cpow(pair.value, p as u64);
        }
        deltas[slot] = (sum - trace).norm() / trace.norm().max(1.0);
    }
    Ok(deltas)
}

/// Runs the full certification: residuals, eigenvector-matrix rank,
/// diagonalization, and trace identities (the latter two only where they
/// apply — see [`VerificationReport`]).
pub fn verify(
    spec: &CirculantSpec,
    decomp: &SpectralDecomposition,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    let m = spec.size();
    let dense = spec.to_dense();
    let max_relative_residual = residual_check(&dense, decomp)?;

    if let Some(info) = &decomp.degenerate {
        // Zero-weight route: the pairs are an eigenbasis fragment for c_0.
        let shifted = dense.sub_scalar_identity(info.eigenvalue)?;
        let floor = tol.rank_pivot_floor * shifted.frobenius_norm();
        let rank = shifted.rank(floor);
        let nullity = m - rank;
        let basis = decomp.pairs.len();
        let check = DegenerateCheck {
            geometric_basis_size: basis,
            nullity,
            algebraic_multiplicity: info.algebraic_multiplicity,
        };
        // When c_0 exhausts the spectrum the trace identities pin it too.
        let trace_deltas = if info.algebraic_multiplicity == m {
            let mut deltas = [0.0f64; 3];
            for (slot, p) in (1usize..=3).enumerate() {
                let trace = spec.trace_power(p)?;
                let sum = cpow(info.eigenvalue, p as u64) * m as f64;
                deltas[slot] = (sum - trace).norm() / trace.norm().max(1.0);
            }
            Some(deltas)
        } else {
            None
        };
        let rank_verdict = nullity >= basis;
        let traces_ok = trace_deltas
            .map(|d| d.iter().all(|x| *x <= tol.trace))
            .unwrap_or(true);
        let passed =
            max_relative_residual <= tol.residual && rank_verdict && traces_ok;
        return Ok(VerificationReport {
            max_relative_residual,
            rank,
            rank_verdict,
            diagonalization_offdiag_norm: None,
            trace_deltas,
            degenerate: Some(check),
            tolerances: *tol,
            passed,
        });
    }

    let t = decomp.eigenvector_matrix()?;
    let floor = tol.rank_pivot_floor * t.frobenius_norm();
    let rank = t.rank(floor);
    let rank_verdict = rank == m;
    let diag = match diagonalization_check(&dense, &t, floor) {
        Ok(x) => Some(x),
        Err(Error::SingularMatrix { .. }) => None,
        Err(e) => return Err(e),
    };
    let trace_deltas = Some(trace_identity_check(spec, decomp)?);

    let diag_ok = diag.map(|x| x <= tol.diag_offdiag).unwrap_or(false);
    let traces_ok = trace_deltas
        .map(|d| d.iter().all(|x| *x <= tol.trace))
        .unwrap_or(true);
    let passed = max_relative_residual <= tol.residual
        && rank_verdict
        && diag_ok
        && traces_ok;
    Ok(VerificationReport {
        max_relative_residual,
        rank,
        rank_verdict,
        diagonalization_offdiag_norm: diag,
        trace_deltas,
        degenerate: None,
        tolerances: *tol,
        passed,
    })
}
