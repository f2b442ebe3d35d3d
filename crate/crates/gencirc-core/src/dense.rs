//! Dense complex matrices and the small amount of linear algebra the
//! verification oracle needs: multiplication, Gaussian elimination with
//! partial pivoting (pivot magnitude = modulus), multi-RHS solves, and a
//! pivot-count rank with a caller-supplied floor.
//!
//! This is verification plumbing for m up to a few thousand, not a general
//! linear-algebra library; clarity over cleverness throughout.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds an n×k matrix whose columns are the given vectors (all of
    /// equal, nonzero length).
    pub fn from_columns(columns: &[Vec<Complex64>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map(|c| c.len()).unwrap_or(0);
        if rows == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut m = DenseMatrix::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::LengthMismatch {
                    expected: rows,
                    actual: col.len(),
                });
            }
            for i in 0..rows {
                m[(i, j)] = col[i];
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    fn same_shape(&self, other: &DenseMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                rows: other.rows,
                cols: other.cols,
                expected_rows: self.rows,
                expected_cols: self.cols,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: Complex64) -> DenseMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= factor;
        }
        out
    }

    /// self − z·I (square only).
    pub fn sub_scalar_identity(&self, z: Complex64) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch {
                rows: self.rows,
                cols: self.cols,
                expected_rows: self.rows,
                expected_cols: self.rows,
            });
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            out[(i, i)] -= z;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                rows: other.rows,
                cols: other.cols,
                expected_rows: self.cols,
                expected_cols: other.cols,
            });
        }
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: x.len(),
            });
        }
        let mut y = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.cols {
                acc += self[(i, j)] * x[j];
            }
            y[i] = acc;
        }
        Ok(y)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> Complex64 {
        let n = self.rows.min(self.cols);
        (0..n).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius norm of the off-diagonal part.
    pub fn offdiagonal_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    acc += self[(i, j)].norm_sqr();
                }
            }
        }
        acc.sqrt()
    }

    /// Rank by Gaussian elimination with partial pivoting, counting pivots
    /// whose modulus exceeds `pivot_floor`. Works on rectangular matrices.
    pub fn rank(&self, pivot_floor: f64) -> usize {
        let mut a = self.clone();
        let mut rank = 0usize;
        let mut pivot_row = 0usize;
        for col in 0..a.cols {
            if pivot_row >= a.rows {
                break;
            }
            // largest-modulus pivot in this column at or below pivot_row
            let mut best = pivot_row;
            let mut best_mag = a[(pivot_row, col)].norm();
            for r in pivot_row + 1..a.rows {
                let mag = a[(r, col)].norm();
                if mag > best_mag {
                    best = r;
                    best_mag = mag;
                }
            }
            if best_mag <= pivot_floor {
                continue; // column is numerically dependent; move on
            }
            a.swap_rows(pivot_row, best);
            let inv = Complex64::new(1.0, 0.0) / a[(pivot_row, col)];
            for r in pivot_row + 1..a.rows {
                let factor = a[(r, col)] * inv;
                if factor == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in col..a.cols {
                    let sub = factor * a[(pivot_row, c)];
                    a[(r, c)] -= sub;
                }
            }
            rank += 1;
            pivot_row += 1;
        }
        rank
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Solves A·X = B for X with A square, via Gaussian elimination with
    /// partial pivoting on the modulus. Fails with `SingularMatrix` when a
    /// pivot's modulus drops to `pivot_floor` or below.
    pub fn solve_matrix(&self, b: &DenseMatrix, pivot_floor: f64) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch {
                rows: self.rows,
                cols: self.cols,
                expected_rows: self.rows,
                expected_cols: self.rows,
            });
        }
        if b.rows != self.rows {
            return Err(Error::ShapeMismatch {
                rows: b.rows,
                cols: b.cols,
                expected_rows: self.rows,
                expected_cols: b.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut x = b.clone();
        // forward elimination, carrying the right-hand sides along
        for col in 0..n {
            let mut best = col;
            let mut best_mag = a[(col, col)].norm();
            for r in col + 1..n {
                let mag = a[(r, col)].norm();
                if mag > best_mag {
                    best = r;
                    best_mag = mag;
                }
            }
            if best_mag <= pivot_floor {
                return Err(Error::SingularMatrix { pivot: col });
            }
            a.swap_rows(col, best);
            x.swap_rows(col, best);
            let inv = Complex64::new(1.0, 0.0) / a[(col, col)];
            for r in col + 1..n {
                let factor = a[(r, col)] * inv;
                if factor == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in col..n {
                    let sub = factor * a[(col, c)];
                    a[(r, c)] -= sub;
                }
                for c in 0..x.cols {
                    let sub = factor * x[(col, c)];
                    x[(r, c)] -= sub;
                }
            }
        }
        // back substitution
        for col in (0..n).rev() {
            let inv = Complex64::new(1.0, 0.0) / a[(col, col)];
            for c in 0..x.cols {
                let mut acc = x[(col, c)];
                for k in col + 1..n {
                    acc -= a[(col, k)] * x[(k, c)];
                }
                x[(col, c)] = acc * inv;
            }
        }
        Ok(x)
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}
