use alloc::vec::Vec;

use super::matrix::Matrix;
use super::tensor::{Tensor12, Tensor21};

/// Matrix units `E_{ij}` in row-major order of `(i, j)`.
///
/// Under the trace pairing this basis is its own dual.
pub fn matrix_units(n: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(Matrix::unit(n, i, j));
        }
    }
    out
}

/// Unit tensors `T^i_{jk}` in flat order of `(i, j, k)`.
pub fn tensor12_units(n: usize) -> Vec<Tensor12> {
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.push(Tensor12::unit(n, i, j, k));
            }
        }
    }
    out
}

/// Unit tensors `a_i^{jk}` in flat order of `(i, j, k)`.
///
/// Dual to [`tensor12_units`] under full contraction.
pub fn tensor21_units(n: usize) -> Vec<Tensor21> {
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.push(Tensor21::unit(n, i, j, k));
            }
        }
    }
    out
}

/// Dimension of the lower-index-symmetric subspace of `Tensor12`.
pub fn sym12_dim(n: usize) -> usize {
    n * n * (n + 1) / 2
}

/// Basis of the symmetric subspace: for each `i` and each `j <= k`, the unit
/// at `(i, j, k)` plus (when `j < k`) its mirror at `(i, k, j)`.
///
/// Ordered by `(i, j, k)` with `j <= k`; every element carries the symmetry
/// flag.
pub fn sym12_basis(n: usize) -> Vec<Tensor12> {
    let mut out = Vec::with_capacity(sym12_dim(n));
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let mut t = Tensor12::zeros_symmetric(n);
                t.set(i, j, k, 1.0);
                t.set(i, k, j, 1.0);
                out.push(t);
            }
        }
    }
    out
}

/// Dual basis to [`sym12_basis`] under full contraction: 1 on the diagonal
/// pairs, 1/2 on each of the two mirrored off-diagonal slots.
///
/// With these weights `<dual[a], basis[b]> = delta_ab` on the symmetric
/// subspace, which is what the generic dual-space assembly relies on.
pub fn sym21_dual_basis(n: usize) -> Vec<Tensor21> {
    let mut out = Vec::with_capacity(sym12_dim(n));
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let mut a = Tensor21::zeros(n);
                if j == k {
                    a.set(i, j, k, 1.0);
                } else {
                    a.set(i, j, k, 0.5);
                    a.set(i, k, j, 0.5);
                }
                out.push(a);
            }
        }
    }
    out
}
