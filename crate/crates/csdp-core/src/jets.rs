//! Second-order jets of maps `R^n -> R^n` fixing the origin.
//!
//! A 2-jet is a pair `(A1, A2)` of a linear part and a symmetric quadratic
//! part, standing for `phi(x) = A1 x + (1/2) A2(x, x) + O(|x|^3)`. Jet
//! composition is truncated composition of the maps; the chain rule makes
//! it exactly the centered semi-direct product of `GL(n)` with symmetric
//! `(1,2)`-tensors, with `GL(n)` acting contravariantly/covariantly. The
//! conversions [`Jet2::into_group_element`] / [`Jet2::from_group_element`]
//! realize that isomorphism, and [`PolyMap2::compose_truncated`] provides an
//! independently coded polynomial-composition oracle for it.

use alloc::vec::Vec;

use crate::algebra::{LinearSpace, Matrix, Tensor12};
use crate::csdp::GroupElement;
use crate::error::{Error, Result};
use crate::instances::glt12;

fn ensure_symmetric(a2: &Tensor12) -> Result<()> {
    if !a2.is_symmetric() {
        return Err(Error::InvalidArgument(
            "quadratic part must be marked symmetric (see Tensor12::symmetrized)",
        ));
    }
    Ok(())
}

fn ensure_same_side(n1: usize, n2: usize) -> Result<()> {
    if n1 != n2 {
        return Err(Error::DimensionMismatch {
            expected: n1,
            found: n2,
        });
    }
    Ok(())
}

/// 2-jet `(A1, A2)` of a local diffeomorphism fixing the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet2 {
    a1: Matrix,
    a2: Tensor12,
}

impl Jet2 {
    /// Build a jet; `a1` must be invertible and `a2` symmetric.
    pub fn new(a1: Matrix, a2: Tensor12) -> Result<Self> {
        ensure_same_side(a1.n(), a2.n())?;
        ensure_symmetric(&a2)?;
        a1.inverse()?;
        Ok(Jet2 { a1, a2 })
    }

    /// Jet of the identity map.
    pub fn identity(n: usize) -> Self {
        Jet2 {
            a1: Matrix::identity(n),
            a2: Tensor12::zeros_symmetric(n),
        }
    }

    /// Dimension of the underlying space.
    pub fn n(&self) -> usize {
        self.a1.n()
    }

    /// Linear part.
    pub fn a1(&self) -> &Matrix {
        &self.a1
    }

    /// Symmetric quadratic part.
    pub fn a2(&self) -> &Tensor12 {
        &self.a2
    }

    /// Jet of `self` after `rhs` (chain rule, truncated at order two):
    ///
    /// ```text
    /// (A1, A2) ∘ (B1, B2) = (A1 B1, A1·B2 + A2 ∘ (B1 x B1))
    /// ```
    pub fn compose(&self, rhs: &Jet2) -> Result<Jet2> {
        ensure_same_side(self.n(), rhs.n())?;
        let a1 = self.a1.multiply(&rhs.a1)?;
        let a2 =
            glt12::left_action(&self.a1, &rhs.a2)?.add(&glt12::right_action(&self.a2, &rhs.a1)?);
        Ok(Jet2 { a1, a2 })
    }

    /// Jet of the inverse map: `(A1^-1, -A1^-1 · A2 ∘ (A1^-1 x A1^-1))`.
    pub fn inverse(&self) -> Result<Jet2> {
        let b1 = self.a1.inverse()?;
        let b2 = glt12::left_action(&b1, &glt12::right_action(&self.a2, &b1)?)?.scale(-1.0);
        Ok(Jet2 { a1: b1, a2: b2 })
    }

    /// Forget the jet interpretation: the same pair as an element of the
    /// product group over symmetric `(1,2)`-tensors.
    pub fn into_group_element(self) -> GroupElement<Tensor12> {
        GroupElement::new(self.a1, self.a2)
    }

    /// Inverse of [`into_group_element`](Self::into_group_element).
    pub fn from_group_element(e: GroupElement<Tensor12>) -> Result<Jet2> {
        Jet2::new(e.g, e.v)
    }
}

/// Polynomial map `phi(x) = L x + (1/2) Q(x, x)` with symmetric `Q`, the
/// degree-two truncation a jet stands for.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMap2 {
    linear: Matrix,
    quadratic: Tensor12,
}

impl PolyMap2 {
    /// Build a polynomial map; `quadratic` must be symmetric.
    pub fn new(linear: Matrix, quadratic: Tensor12) -> Result<Self> {
        ensure_same_side(linear.n(), quadratic.n())?;
        ensure_symmetric(&quadratic)?;
        Ok(PolyMap2 { linear, quadratic })
    }

    /// The map with the same data as a jet.
    pub fn from_jet(jet: &Jet2) -> Self {
        PolyMap2 {
            linear: jet.a1.clone(),
            quadratic: jet.a2.clone(),
        }
    }

    /// Dimension of the underlying space.
    pub fn n(&self) -> usize {
        self.linear.n()
    }

    /// Evaluate at a point.
    pub fn eval(&self, x: &[f64]) -> Result<Vec<f64>> {
        let n = self.n();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: x.len(),
            });
        }
        let mut out = self.linear.apply(x)?;
        for (i, out_i) in out.iter_mut().enumerate() {
            let mut q = 0.0;
            for j in 0..n {
                for k in 0..n {
                    q += self.quadratic.get(i, j, k) * x[j] * x[k];
                }
            }
            *out_i += 0.5 * q;
        }
        Ok(out)
    }

    /// The 2-jet of this map at the origin; fails if the linear part is
    /// singular.
    pub fn jet(&self) -> Result<Jet2> {
        Jet2::new(self.linear.clone(), self.quadratic.clone())
    }

    /// Degree-two truncation of `self ∘ inner`, expanded directly from the
    /// polynomial composition (independent of jet composition, which it
    /// serves as an oracle for):
    ///
    /// ```text
    /// L' = L M,   Q'^k_ij = L^k_l Q_inner^l_ij + Q^k_lm M^l_i M^m_j
    /// ```
    pub fn compose_truncated(&self, inner: &PolyMap2) -> Result<PolyMap2> {
        ensure_same_side(self.n(), inner.n())?;
        let n = self.n();
        let mut linear = Matrix::zeros(n);
        for k in 0..n {
            for i in 0..n {
                let mut acc = 0.0;
                for l in 0..n {
                    acc += self.linear[(k, l)] * inner.linear[(l, i)];
                }
                linear[(k, i)] = acc;
            }
        }
        let mut quadratic = Tensor12::zeros(n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let mut acc = 0.0;
                    for l in 0..n {
                        acc += self.linear[(k, l)] * inner.quadratic.get(l, i, j);
                        for m in 0..n {
                            acc += self.quadratic.get(k, l, m)
                                * inner.linear[(l, i)]
                                * inner.linear[(m, j)];
                        }
                    }
                    quadratic.set(k, i, j, acc);
                }
            }
        }
        Ok(PolyMap2 {
            linear,
            quadratic: quadratic.symmetrized(),
        })
    }
}
