use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use super::space::LinearSpace;
use super::tolerances::Tolerances;
use crate::error::{Error, Result};
use crate::scalar;

/// Dense square matrix over `f64`, row-major.
///
/// Entry `(i, j)` is row `i`, column `j`; the matrix acts on column vectors,
/// `y_i = sum_j m[(i, j)] x_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    entries: Vec<f64>,
}

impl Matrix {
    /// Zero matrix of side `n`.
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![0.0; n * n],
        }
    }

    /// Identity matrix of side `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Matrix unit `E_{ij}`: 1 at `(i, j)`, 0 elsewhere.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(n);
        m[(i, j)] = 1.0;
        m
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(diag: &[f64]) -> Self {
        let mut m = Matrix::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Build from a flat row-major slice of length `n * n`.
    pub fn from_flat(n: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        Ok(Matrix {
            n,
            entries: entries.to_vec(),
        })
    }

    /// Build from nested rows, checking squareness and finiteness.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        if !entries.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Matrix { n, entries })
    }

    /// Side length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entries as nested rows.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Matrix product `self * rhs`.
    pub fn multiply(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: rhs.n,
            });
        }
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self[(i, l)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(l, j)];
                }
            }
        }
        Ok(out)
    }

    /// Transpose.
    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Trace.
    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Apply to a column vector.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * x[j]).sum())
            .collect())
    }

    /// Inverse with the default singularity threshold.
    pub fn inverse(&self) -> Result<Matrix> {
        self.inverse_with_tol(Tolerances::default().sing_tol)
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    ///
    /// A pivot below `sing_tol * max_abs(self)^n` is treated as singular, so
    /// the guard scales with the data instead of being absolute.
    pub fn inverse_with_tol(&self, sing_tol: f64) -> Result<Matrix> {
        let n = self.n;
        let scale = self.max_abs();
        let mut threshold = sing_tol;
        for _ in 0..n {
            threshold *= scale;
        }
        if !threshold.is_finite() {
            return Err(Error::NonFinite);
        }

        let mut work = self.clone();
        let mut out = Matrix::identity(n);
        for col in 0..n {
            let mut pivot_row = col;
            let mut pivot_val = scalar::abs(work[(col, col)]);
            for r in col + 1..n {
                let v = scalar::abs(work[(r, col)]);
                if v > pivot_val {
                    pivot_val = v;
                    pivot_row = r;
                }
            }
            // A NaN pivot (from an already-poisoned matrix) must also fail,
            // so the comparison stays negated.
            #[allow(clippy::neg_cmp_op_on_partial_ord)]
            if !(pivot_val > threshold) {
                return Err(Error::SingularMatrix);
            }
            if pivot_row != col {
                for j in 0..n {
                    work.entries.swap(col * n + j, pivot_row * n + j);
                    out.entries.swap(col * n + j, pivot_row * n + j);
                }
            }
            let inv_pivot = 1.0 / work[(col, col)];
            for j in 0..n {
                work[(col, j)] *= inv_pivot;
                out[(col, j)] *= inv_pivot;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = work[(r, col)];
                if factor == 0.0 {
                    continue;
                }
                for j in 0..n {
                    work[(r, j)] -= factor * work[(col, j)];
                    out[(r, j)] -= factor * out[(col, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix exponential by scaling-and-squaring over a truncated series.
    ///
    /// The argument is halved until its Frobenius norm is at most 1/2, the
    /// Taylor series is summed until terms vanish at working precision, and
    /// the result is squared back up. Converges for every finite input.
    pub fn exp(&self) -> Matrix {
        let n = self.n;
        let mut squarings = 0u32;
        let mut norm = self.norm();
        while norm > 0.5 && squarings < 64 {
            norm *= 0.5;
            squarings += 1;
        }
        let mut factor = 1.0;
        for _ in 0..squarings {
            factor *= 0.5;
        }
        let scaled = self.scale(factor);

        let mut sum = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        for k in 1..=64u32 {
            term = term
                .multiply(&scaled)
                .expect("same dimension")
                .scale(1.0 / f64::from(k));
            sum = sum.add(&term);
            if term.max_abs() <= f64::EPSILON * scalar::max(1.0, sum.max_abs()) {
                break;
            }
        }
        for _ in 0..squarings {
            sum = sum.multiply(&sum).expect("same dimension");
        }
        sum
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.entries[i * self.n + j]
    }
}

impl LinearSpace for Matrix {
    fn dim(&self) -> usize {
        self.entries.len()
    }

    fn components(&self) -> &[f64] {
        &self.entries
    }

    fn components_mut(&mut self) -> &mut [f64] {
        &mut self.entries
    }
}

/// Trace pairing `<a, b> = tr(a^T b) = sum_ij a_ij b_ij`.
pub fn trace_pairing(a: &Matrix, b: &Matrix) -> Result<f64> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(a.dot(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat2(a: f64, b: f64, c: f64, d: f64) -> Matrix {
        Matrix::from_flat(2, &[a, b, c, d]).unwrap()
    }

    #[test]
    fn multiply_known_product() {
        let a = mat2(1.0, 2.0, 3.0, 4.0);
        let b = mat2(5.0, 6.0, 7.0, 8.0);
        assert_eq!(a.multiply(&b).unwrap(), mat2(19.0, 22.0, 43.0, 50.0));
    }

    #[test]
    fn inverse_diagonal() {
        let inv = Matrix::diagonal(&[2.0, 4.0]).inverse().unwrap();
        assert_eq!(inv, Matrix::diagonal(&[0.5, 0.25]));
    }

    #[test]
    fn inverse_round_trip() {
        let a = mat2(1.0, 2.0, 3.0, 4.0);
        let prod = a.multiply(&a.inverse().unwrap()).unwrap();
        assert!(prod.sub(&Matrix::identity(2)).max_abs() < 1e-14);
    }

    #[test]
    fn inverse_rejects_singular() {
        let a = mat2(1.0, 2.0, 2.0, 4.0);
        assert_eq!(a.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn inverse_rejects_zero() {
        assert_eq!(Matrix::zeros(3).inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn exp_nilpotent_is_identity_plus() {
        let e12 = Matrix::unit(2, 0, 1);
        let expected = Matrix::identity(2).add(&e12);
        assert!(e12.exp().sub(&expected).max_abs() < 1e-15);
    }

    #[test]
    fn exp_diagonal() {
        let x = Matrix::diagonal(&[1.0, -1.0]);
        let expected = Matrix::diagonal(&[core::f64::consts::E, 1.0 / core::f64::consts::E]);
        assert!(x.exp().sub(&expected).max_abs() < 1e-13);
    }

    #[test]
    fn exp_inverse_of_exp_negative() {
        let x = mat2(0.3, -0.8, 1.1, 0.2);
        let prod = x.exp().multiply(&x.scale(-1.0).exp()).unwrap();
        assert!(prod.sub(&Matrix::identity(2)).max_abs() < 1e-13);
    }

    #[test]
    fn trace_pairing_is_componentwise() {
        let a = mat2(1.0, 2.0, 3.0, 4.0);
        let b = mat2(5.0, 6.0, 7.0, 8.0);
        let direct = a.transpose().multiply(&b).unwrap().trace();
        assert_eq!(trace_pairing(&a, &b).unwrap(), direct);
    }

    #[test]
    fn apply_column_vector() {
        let a = mat2(1.0, 2.0, 3.0, 4.0);
        assert_eq!(a.apply(&[1.0, 1.0]).unwrap(), vec![3.0, 7.0]);
    }
}
