use alloc::vec::Vec;

use crate::scalar;

/// Flat-storage vector-space operations shared by matrices and tensors.
///
/// Implementors expose their components as a single `f64` slice; the provided
/// combinators do elementwise arithmetic without caring about shape. Callers
/// must only combine values of identical shape (same `n`, same tensor kind);
/// the combinators assert this on the flat length.
pub trait LinearSpace: Clone {
    /// Number of flat components.
    fn dim(&self) -> usize;

    /// Flat view of the components.
    fn components(&self) -> &[f64];

    /// Mutable flat view of the components.
    ///
    /// Mutating through this view must preserve any structural invariant the
    /// type advertises (e.g. the symmetry flag on [`crate::algebra::Tensor12`]).
    fn components_mut(&mut self) -> &mut [f64];

    /// Fold metadata of `rhs` into `self` after an elementwise combination.
    ///
    /// The default is a no-op; types carrying structure flags intersect them
    /// here so that e.g. symmetric + symmetric stays marked symmetric.
    fn merge_metadata(&mut self, _rhs: &Self) {}

    /// Elementwise sum.
    fn add(&self, rhs: &Self) -> Self {
        self.axpy(1.0, rhs)
    }

    /// Elementwise difference.
    fn sub(&self, rhs: &Self) -> Self {
        self.axpy(-1.0, rhs)
    }

    /// `self + c * rhs`.
    fn axpy(&self, c: f64, rhs: &Self) -> Self {
        assert_eq!(
            self.dim(),
            rhs.dim(),
            "shape mismatch in linear combination"
        );
        let mut out = self.clone();
        for (o, r) in out.components_mut().iter_mut().zip(rhs.components()) {
            *o += c * r;
        }
        out.merge_metadata(rhs);
        out
    }

    /// Scalar multiple.
    fn scale(&self, c: f64) -> Self {
        let mut out = self.clone();
        for o in out.components_mut() {
            *o *= c;
        }
        out
    }

    /// All components zeroed, same shape and metadata.
    fn zeros_like(&self) -> Self {
        self.scale(0.0)
    }

    /// Euclidean norm of the flat components (Frobenius norm for matrices).
    fn norm(&self) -> f64 {
        scalar::sqrt(self.components().iter().map(|x| x * x).sum())
    }

    /// Largest absolute component.
    fn max_abs(&self) -> f64 {
        self.components()
            .iter()
            .fold(0.0, |acc, &x| scalar::max(acc, scalar::abs(x)))
    }

    /// Whether every component is finite.
    fn is_finite(&self) -> bool {
        self.components().iter().all(|x| x.is_finite())
    }

    /// Euclidean dot product of the flat components.
    fn dot(&self, rhs: &Self) -> f64 {
        assert_eq!(self.dim(), rhs.dim(), "shape mismatch in dot product");
        self.components()
            .iter()
            .zip(rhs.components())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Linear combination of basis elements: `sum_k coeffs[k] * basis[k]`.
    ///
    /// Panics if `basis` is empty or the lengths differ.
    fn combination(basis: &[Self], coeffs: &[f64]) -> Self {
        assert!(!basis.is_empty(), "empty basis");
        assert_eq!(
            basis.len(),
            coeffs.len(),
            "basis/coefficient length mismatch"
        );
        let mut out = basis[0].scale(coeffs[0]);
        for (e, &c) in basis.iter().zip(coeffs).skip(1) {
            out = out.axpy(c, e);
        }
        out
    }

    /// Components copied into an owned vector.
    fn to_vec(&self) -> Vec<f64> {
        self.components().to_vec()
    }
}
