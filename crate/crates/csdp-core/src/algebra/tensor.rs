use alloc::vec;
use alloc::vec::Vec;

use super::space::LinearSpace;
use crate::error::{Error, Result};
use crate::scalar;

/// Tensor with one upper and two lower indices, components `T^i_{jk}`.
///
/// Stored flat at offset `i * n^2 + j * n + k`. The `symmetric` flag records
/// that `T^i_{jk} = T^i_{kj}` holds exactly; constructors that set it enforce
/// it, and elementwise combinations keep it only when both operands carry it.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor12 {
    n: usize,
    components: Vec<f64>,
    symmetric: bool,
}

impl Tensor12 {
    /// Zero tensor of side `n`.
    pub fn zeros(n: usize) -> Self {
        Tensor12 {
            n,
            components: vec![0.0; n * n * n],
            symmetric: false,
        }
    }

    /// Zero tensor marked symmetric.
    pub fn zeros_symmetric(n: usize) -> Self {
        let mut t = Tensor12::zeros(n);
        t.symmetric = true;
        t
    }

    /// Unit tensor: 1 at `(i, j, k)`, 0 elsewhere.
    pub fn unit(n: usize, i: usize, j: usize, k: usize) -> Self {
        let mut t = Tensor12::zeros(n);
        t.set(i, j, k, 1.0);
        t
    }

    /// Build from a flat slice of length `n^3` laid out as `i * n^2 + j * n + k`.
    pub fn from_flat(n: usize, components: &[f64]) -> Result<Self> {
        if components.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: components.len(),
            });
        }
        Ok(Tensor12 {
            n,
            components: components.to_vec(),
            symmetric: false,
        })
    }

    /// Build from nested `[i][j][k]` data, checking shape and finiteness.
    pub fn from_nested(data: &[Vec<Vec<f64>>]) -> Result<Self> {
        let n = data.len();
        let mut components = Vec::with_capacity(n * n * n);
        for plane in data {
            if plane.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: plane.len(),
                });
            }
            for row in plane {
                if row.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: row.len(),
                    });
                }
                components.extend_from_slice(row);
            }
        }
        if !components.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Tensor12 {
            n,
            components,
            symmetric: false,
        })
    }

    /// Side length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Component `T^i_{jk}`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.components[(i * self.n + j) * self.n + k]
    }

    /// Set component `T^i_{jk}`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: f64) {
        let n = self.n;
        self.components[(i * n + j) * n + k] = value;
    }

    /// Whether this tensor is marked symmetric in its lower indices.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Set the symmetry flag without checking; callers must guarantee exact
    /// lower-index symmetry.
    pub(crate) fn set_symmetric_unchecked(&mut self, flag: bool) {
        self.symmetric = flag;
    }

    /// Largest violation of lower-index symmetry, `max |T^i_{jk} - T^i_{kj}|`.
    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                for k in j + 1..self.n {
                    worst = scalar::max(worst, scalar::abs(self.get(i, j, k) - self.get(i, k, j)));
                }
            }
        }
        worst
    }

    /// Symmetric part in the lower indices, with the symmetry flag set.
    pub fn symmetrized(&self) -> Tensor12 {
        let mut out = Tensor12::zeros_symmetric(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    out.set(i, j, k, 0.5 * (self.get(i, j, k) + self.get(i, k, j)));
                }
            }
        }
        out
    }

    /// Nested `[i][j][k]` copy of the components.
    pub fn to_nested(&self) -> Vec<Vec<Vec<f64>>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| (0..self.n).map(|k| self.get(i, j, k)).collect())
                    .collect()
            })
            .collect()
    }
}

impl LinearSpace for Tensor12 {
    fn dim(&self) -> usize {
        self.components.len()
    }

    fn components(&self) -> &[f64] {
        &self.components
    }

    fn components_mut(&mut self) -> &mut [f64] {
        &mut self.components
    }

    fn merge_metadata(&mut self, rhs: &Self) {
        self.symmetric &= rhs.symmetric;
    }
}

/// Tensor with one lower and two upper indices, components `a_i^{jk}`.
///
/// This is the dual shape to [`Tensor12`] under full contraction; it uses the
/// same `[i][j][k]` flat layout.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor21 {
    n: usize,
    components: Vec<f64>,
}

impl Tensor21 {
    /// Zero tensor of side `n`.
    pub fn zeros(n: usize) -> Self {
        Tensor21 {
            n,
            components: vec![0.0; n * n * n],
        }
    }

    /// Unit tensor: 1 at `(i, j, k)`, 0 elsewhere.
    pub fn unit(n: usize, i: usize, j: usize, k: usize) -> Self {
        let mut t = Tensor21::zeros(n);
        t.set(i, j, k, 1.0);
        t
    }

    /// Build from a flat slice of length `n^3` laid out as `i * n^2 + j * n + k`.
    pub fn from_flat(n: usize, components: &[f64]) -> Result<Self> {
        if components.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: components.len(),
            });
        }
        Ok(Tensor21 {
            n,
            components: components.to_vec(),
        })
    }

    /// Side length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Component `a_i^{jk}`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.components[(i * self.n + j) * self.n + k]
    }

    /// Set component `a_i^{jk}`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: f64) {
        let n = self.n;
        self.components[(i * n + j) * n + k] = value;
    }

    /// Largest violation of upper-index symmetry, `max |a_i^{jk} - a_i^{kj}|`.
    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                for k in j + 1..self.n {
                    worst = scalar::max(worst, scalar::abs(self.get(i, j, k) - self.get(i, k, j)));
                }
            }
        }
        worst
    }

    /// Symmetric part in the upper indices.
    pub fn symmetrized(&self) -> Tensor21 {
        let mut out = Tensor21::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    out.set(i, j, k, 0.5 * (self.get(i, j, k) + self.get(i, k, j)));
                }
            }
        }
        out
    }
}

impl LinearSpace for Tensor21 {
    fn dim(&self) -> usize {
        self.components.len()
    }

    fn components(&self) -> &[f64] {
        &self.components
    }

    fn components_mut(&mut self) -> &mut [f64] {
        &mut self.components
    }
}

/// Full contraction `<a, T> = sum_ijk a_i^{jk} T^i_{jk}`.
pub fn tensor_pairing(a: &Tensor21, t: &Tensor12) -> Result<f64> {
    if a.n() != t.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: t.n(),
        });
    }
    Ok(a.components()
        .iter()
        .zip(t.components())
        .map(|(x, y)| x * y)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_layout_matches_get() {
        let n = 3;
        let data: Vec<f64> = (0..27).map(|x| x as f64).collect();
        let t = Tensor12::from_flat(n, &data).unwrap();
        let flat_index = n * n + 2 * n;
        assert_eq!(t.get(1, 2, 0), flat_index as f64);
    }

    #[test]
    fn symmetrized_sets_flag_and_symmetry() {
        let t = Tensor12::unit(2, 0, 0, 1);
        let s = t.symmetrized();
        assert!(s.is_symmetric());
        assert_eq!(s.get(0, 0, 1), 0.5);
        assert_eq!(s.get(0, 1, 0), 0.5);
        assert_eq!(s.max_asymmetry(), 0.0);
        assert!(t.max_asymmetry() == 1.0);
    }

    #[test]
    fn symmetry_flag_survives_symmetric_sums_only() {
        let a = Tensor12::unit(2, 0, 0, 1).symmetrized();
        let b = Tensor12::unit(2, 1, 1, 0).symmetrized();
        assert!(a.add(&b).is_symmetric());
        assert!(!a.add(&Tensor12::unit(2, 0, 0, 1)).is_symmetric());
    }

    #[test]
    fn pairing_contracts_fully() {
        let t = Tensor12::unit(2, 1, 0, 1);
        let a = Tensor21::unit(2, 1, 0, 1);
        assert_eq!(tensor_pairing(&a, &t).unwrap(), 1.0);
        assert_eq!(
            tensor_pairing(&Tensor21::unit(2, 1, 1, 0), &t).unwrap(),
            0.0
        );
    }
}
