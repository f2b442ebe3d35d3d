//! Polynomials in a weighted shift matrix: C = Σ_r c_r·U^r.
//!
//! Because U^(jm+r) collapses onto U^r with a scalar factor when the shift
//! has full order (gcd(s, m) = 1), any such polynomial folds to degree
//! < m; `fold` implements that coefficient reduction. Dense assembly,
//! matvec, traces, and the Frobenius norm are all computed from the sparse
//! power structure — the dense form is only ever materialized on demand.

use num_complex::Complex64;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::genperm::{cpow, GenPermMatrix};

/// Evaluates Σ_r coeffs\[r\]·z^r by Horner's rule.
pub fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// C = Σ_r c_r·U^r for a weighted shift matrix U and coefficients c_0..c_k.
/// Trailing zero coefficients are allowed; the list must be nonempty.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantSpec {
    base: GenPermMatrix,
    coeffs: Vec<Complex64>,
}

/// Result of folding the coefficients down to exponents below m:
/// c'_r = Σ_j c_(jm+r)·(prod of weights)^j, always length m.
///
/// The fold relies on U^m being the scalar matrix (prod of weights)·I,
/// which holds exactly when gcd(s, m) = 1; for other shifts it is only the
/// identity when the original degree was already below m. The dense and
/// matvec paths of [`CirculantSpec`] route around the fold in that case.
#[derive(Debug, Clone, PartialEq)]
pub struct FoldedSpec {
    base: GenPermMatrix,
    coeffs: Vec<Complex64>,
}

impl FoldedSpec {
    pub fn base(&self) -> &GenPermMatrix {
        &self.base
    }

    /// The reduced coefficients, exactly m of them.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn to_circulant(&self) -> CirculantSpec {
        CirculantSpec {
            base: self.base.clone(),
            coeffs: self.coeffs.clone(),
        }
    }
}

impl CirculantSpec {
    pub fn new(base: GenPermMatrix, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        Ok(CirculantSpec { base, coeffs })
    }

    pub fn base(&self) -> &GenPermMatrix {
        &self.base
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    /// Degree k of the defining polynomial (trailing zeros included).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Σ_r c_r·z^r at a scalar point.
    pub fn eval_at(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    /// Folds the coefficients to exponents below m via
    /// c'_r = Σ_j c_(jm+r)·(prod of weights)^j. Exact whenever
    /// gcd(s, m) = 1 (or the degree was already below m, where it just
    /// pads with zeros).
    pub fn fold(&self) -> FoldedSpec {
        let m = self.size();
        let prod = self.base.weight_product();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); m];
        for (idx, &c) in self.coeffs.iter().enumerate() {
            let j = (idx / m) as u64;
            coeffs[idx % m] += c * cpow(prod, j);
        }
        FoldedSpec {
            base: self.base.clone(),
            coeffs,
        }
    }

    /// Coefficients actually used by dense/matvec assembly: the folded list
    /// when folding is exact and shortens the work, the original otherwise.
    fn effective_coeffs(&self) -> std::borrow::Cow<'_, [Complex64]> {
        let m = self.size();
        if self.coeffs.len() <= m {
            std::borrow::Cow::Borrowed(&self.coeffs)
        } else if self.base.perm().orbit_count() == 1 {
            std::borrow::Cow::Owned(self.fold().coeffs)
        } else {
            // gcd(s, m) > 1 and degree ≥ m: folding would be wrong, so sum
            // the powers directly.
            std::borrow::Cow::Borrowed(&self.coeffs)
        }
    }

    /// Dense m×m form. U^r has row i's single entry at column (i + r·s)
    /// mod m with value the length-r walk product, so the assembly walks
    /// all powers once in O(m · min(k, m)) when folding applies.
    pub fn to_dense(&self) -> DenseMatrix {
        let m = self.size();
        let s = self.base.perm().shift();
        let u = self.base.weights();
        let coeffs = self.effective_coeffs();
        let mut out = DenseMatrix::zeros(m, m);
        // walk[i] = product of u along i, i+s, …, length r; offset = r·s mod m
        let mut walk = vec![Complex64::new(1.0, 0.0); m];
        let mut offset = 0usize;
        for &c in coeffs.iter() {
            if c != Complex64::new(0.0, 0.0) {
                for i in 0..m {
                    out[(i, (i + offset) % m)] += c * walk[i];
                }
            }
            for (i, w) in walk.iter_mut().enumerate() {
                *w *= u[(i + offset) % m];
            }
            offset = (offset + s) % m;
        }
        out
    }

    /// y = C·x without materializing the dense form, by Horner's rule over
    /// sparse applications of U. O(m · min(k, m)) when folding applies,
    /// O(m·k) otherwise.
    pub fn matvec(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        let m = self.size();
        if x.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                actual: x.len(),
            });
        }
        let coeffs = self.effective_coeffs();
        let top = *coeffs.last().expect("coeffs nonempty by construction");
        let mut y: Vec<Complex64> = x.iter().map(|&v| v * top).collect();
        for &c in coeffs.iter().rev().skip(1) {
            y = self.base.matvec(&y).expect("length preserved");
            if c != Complex64::new(0.0, 0.0) {
                for (yi, &xi) in y.iter_mut().zip(x.iter()) {
                    *yi += c * xi;
                }
            }
        }
        Ok(y)
    }

    /// tr(C^p) for p ∈ {1, 2, 3}, computed from the dense form.
    pub fn trace_power(&self, p: usize) -> Result<Complex64> {
        let dense = self.to_dense();
        match p {
            1 => Ok(dense.trace()),
            2 => {
                let m = self.size();
                let mut acc = Complex64::new(0.0, 0.0);
                for i in 0..m {
                    for j in 0..m {
                        acc += dense[(i, j)] * dense[(j, i)];
                    }
                }
                Ok(acc)
            }
            3 => {
                let sq = dense.mul(&dense).expect("square");
                let m = self.size();
                let mut acc = Complex64::new(0.0, 0.0);
                for i in 0..m {
                    for j in 0..m {
                        acc += sq[(i, j)] * dense[(j, i)];
                    }
                }
                Ok(acc)
            }
            other => Err(Error::UnsupportedTracePower(other)),
        }
    }

    /// Frobenius norm, streamed row by row from the sparse power structure
    /// so no m×m allocation is needed (the row of C touches at most
    /// min(k+1, m) columns).
    pub fn frobenius_norm(&self) -> f64 {
        let m = self.size();
        let s = self.base.perm().shift();
        let u = self.base.weights();
        let coeffs = self.effective_coeffs();
        let mut row = vec![Complex64::new(0.0, 0.0); m];
        let mut marked = vec![false; m];
        let mut touched: Vec<usize> = Vec::with_capacity(coeffs.len());
        let mut acc = 0.0f64;
        for i in 0..m {
            touched.clear();
            let mut walk = Complex64::new(1.0, 0.0);
            let mut col = i;
            for &c in coeffs.iter() {
                if c != Complex64::new(0.0, 0.0) {
                    if !marked[col] {
                        marked[col] = true;
                        touched.push(col);
                    }
                    row[col] += c * walk;
                }
                walk *= u[col];
                col = (col + s) % m;
            }
            for &j in &touched {
                acc += row[j].norm_sqr();
                row[j] = Complex64::new(0.0, 0.0);
                marked[j] = false;
            }
        }
        acc.sqrt()
    }
}
