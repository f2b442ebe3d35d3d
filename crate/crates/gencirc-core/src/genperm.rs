//! Generalized permutation matrices built on the cyclic shift: U = D·P,
//! where D is the diagonal of weights u and P is the permutation matrix of
//! x ↦ (x + s) mod m. Row i has its single nonzero, u_i, in column
//! (i + s) mod m.
//!
//! Powers stay in the same family: U^k is a diagonal times the k·s shift,
//! with weights given by products of u along the shift's walk. Products of
//! the weights around one orbit (`orbit_product`) drive the entire spectral
//! theory downstream.

use num_complex::Complex64;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::shift::ShiftPermutation;

/// z^e by repeated squaring (num-complex's powi takes i32; the fold and
/// power paths want u64 exponents).
pub(crate) fn cpow(z: Complex64, mut e: u64) -> Complex64 {
    let mut base = z;
    let mut acc = Complex64::new(1.0, 0.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Weighted shift matrix U = D_u · P. Stores the weight product, which the
/// power and fold identities reuse constantly.
#[derive(Debug, Clone, PartialEq)]
pub struct GenPermMatrix {
    perm: ShiftPermutation,
    weights: Vec<Complex64>,
    weight_product: Complex64,
}

/// The diagonal weights of U^r together with the exponent they came from:
/// entry i is the product of u along the length-r walk starting at i.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerWeights {
    pub exponent: usize,
    pub weights: Vec<Complex64>,
}

/// Product of the weights along the first `len` steps of an orbit walk,
/// starting at the representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitProduct {
    pub representative: usize,
    pub len: usize,
    pub value: Complex64,
}

/// U^k in factored form: `factor · reduced`, where `reduced` is again a
/// weighted shift matrix (shift k·s mod m). When gcd(s, m) = 1 the factor
/// is (prod of all weights)^(k div m) and `reduced` carries exactly the
/// length-(k mod m) walk products; for other shifts the per-orbit excess is
/// folded into the reduced weights so the identity U^k = factor · reduced
/// holds for every shift.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixPower {
    pub factor: Complex64,
    pub reduced: GenPermMatrix,
}

impl MatrixPower {
    pub fn to_dense(&self) -> DenseMatrix {
        self.reduced.to_dense().scale(self.factor)
    }
}

impl GenPermMatrix {
    /// Builds U = D_u·P from a shift permutation and one weight per row.
    pub fn new(perm: ShiftPermutation, weights: Vec<Complex64>) -> Result<Self> {
        if weights.len() != perm.modulus() {
            return Err(Error::LengthMismatch {
                expected: perm.modulus(),
                actual: weights.len(),
            });
        }
        let weight_product = weights.iter().product();
        Ok(GenPermMatrix {
            perm,
            weights,
            weight_product,
        })
    }

    pub fn size(&self) -> usize {
        self.perm.modulus()
    }

    pub fn perm(&self) -> &ShiftPermutation {
        &self.perm
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    /// Product of all m weights, cached at construction.
    pub fn weight_product(&self) -> Complex64 {
        self.weight_product
    }

    /// Row indices whose weight is exactly zero, ascending.
    pub fn zero_weight_positions(&self) -> Vec<usize> {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w == Complex64::new(0.0, 0.0))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn has_zero_weight(&self) -> bool {
        self.weights
            .iter()
            .any(|w| *w == Complex64::new(0.0, 0.0))
    }

    /// y = U·x, i.e. y_i = u_i · x_((i+s) mod m). O(m).
    pub fn matvec(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        let m = self.size();
        if x.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                actual: x.len(),
            });
        }
        let s = self.perm.shift();
        let mut y = vec![Complex64::new(0.0, 0.0); m];
        for i in 0..m {
            y[i] = self.weights[i] * x[(i + s) % m];
        }
        Ok(y)
    }

    /// Diagonal weights of U^r: entry i is the product of u along the walk
    /// i, i+s, …, i+(r−1)s (mod m). O(m·r); r = 0 gives all ones.
    pub fn power_weights(&self, r: usize) -> PowerWeights {
        let m = self.size();
        let s = self.perm.shift();
        let mut weights = vec![Complex64::new(1.0, 0.0); m];
        for (i, w) in weights.iter_mut().enumerate() {
            let mut x = i;
            for _ in 0..r {
                *w *= self.weights[x];
                x = (x + s) % m;
            }
        }
        PowerWeights {
            exponent: r,
            weights,
        }
    }

    /// Product of the weights along the first `len` steps of orbit `t`'s
    /// walk: u_t · u_(t+s) · … (`len` factors). `t` must be an orbit
    /// representative and 1 ≤ len ≤ order.
    pub fn orbit_product(&self, t: usize, len: usize) -> Result<OrbitProduct> {
        let g = self.perm.orbit_count();
        if t >= g {
            return Err(Error::NotARepresentative { index: t, count: g });
        }
        let d = self.perm.order();
        if len == 0 || len > d {
            return Err(Error::OrbitLengthOutOfRange { len, order: d });
        }
        let m = self.size();
        let s = self.perm.shift();
        let mut value = Complex64::new(1.0, 0.0);
        let mut x = t;
        for _ in 0..len {
            value *= self.weights[x];
            x = (x + s) % m;
        }
        Ok(OrbitProduct {
            representative: t,
            len,
            value,
        })
    }

    /// U^k as `factor · reduced` (see [`MatrixPower`]). For gcd(s, m) = 1
    /// the factor is weight_product^(k div m) and the reduced weights are
    /// exactly the length-(k mod m) walk products — in particular U^m is
    /// weight_product · I. For gcd(s, m) > 1 the walk products around an
    /// orbit differ between orbits, so the per-orbit excess
    /// (orbit_product(t, d)^g / weight_product)^(k div m) is folded into the
    /// reduced weights (directly, without the division, when the weight
    /// product is zero); U^k = factor · reduced holds for every shift.
    pub fn power(&self, k: u64) -> MatrixPower {
        let m = self.size() as u64;
        let q = k / m;
        let r = (k % m) as usize;
        let mut reduced_weights = self.power_weights(r).weights;
        let g = self.perm.orbit_count();
        let d = self.perm.order();
        let zero = Complex64::new(0.0, 0.0);

        let factor = if q == 0 {
            Complex64::new(1.0, 0.0)
        } else if g == 1 {
            cpow(self.weight_product, q)
        } else if self.weight_product != zero {
            // Per-orbit correction: U^m = diag of orbit_product(t, d)^g, so
            // the excess over weight_product^q is a diagonal constant on
            // each orbit.
            let mut correction = Vec::with_capacity(g);
            for t in 0..g {
                let a_d = self
                    .orbit_product(t, d)
                    .expect("t < g and d valid")
                    .value;
                let rho = cpow(a_d, g as u64) / self.weight_product;
                correction.push(cpow(rho, q));
            }
            for (i, w) in reduced_weights.iter_mut().enumerate() {
                *w *= correction[i % g];
            }
            cpow(self.weight_product, q)
        } else {
            // Zero weight product with several orbits: the compensated form
            // would divide by zero, so write the orbit powers straight into
            // the reduced weights.
            for (i, w) in reduced_weights.iter_mut().enumerate() {
                let a_d = self
                    .orbit_product(i % g, d)
                    .expect("representative valid")
                    .value;
                *w *= cpow(a_d, q * g as u64);
            }
            Complex64::new(1.0, 0.0)
        };

        let reduced_perm = self.perm.power(r as i64);
        MatrixPower {
            factor,
            reduced: GenPermMatrix::new(reduced_perm, reduced_weights)
                .expect("weights length preserved"),
        }
    }

    /// Dense m×m form: row i has u_i in column (i + s) mod m.
    pub fn to_dense(&self) -> DenseMatrix {
        let m = self.size();
        let s = self.perm.shift();
        let mut out = DenseMatrix::zeros(m, m);
        for i in 0..m {
            out[(i, (i + s) % m)] = self.weights[i];
        }
        out
    }
}
