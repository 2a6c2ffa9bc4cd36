//! `GL(n)` acting on `(1,2)`-tensors: contravariantly on the upper index
//! from the left, covariantly on both lower indices from the right.

use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::{
    sym12_basis, sym21_dual_basis, tensor12_units, tensor21_units, tensor_pairing, Matrix,
    Tensor12, Tensor21,
};
use crate::csdp::ActionPair;
use crate::error::{Error, Result};
use crate::sampling;

fn check_n(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Left action on the upper index: `(g·T)^l_jk = g^l_i T^i_jk`.
pub fn left_action(g: &Matrix, t: &Tensor12) -> Result<Tensor12> {
    check_n(t.n(), g.n())?;
    let n = t.n();
    let mut out = Tensor12::zeros(n);
    for l in 0..n {
        for i in 0..n {
            let c = g[(l, i)];
            if c == 0.0 {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    out.set(l, j, k, out.get(l, j, k) + c * t.get(i, j, k));
                }
            }
        }
    }
    if t.is_symmetric() {
        out.set_symmetric_unchecked(true);
    }
    Ok(out)
}

/// Right action on both lower indices: `(T·g)^i_jk = T^i_lm g^l_j g^m_k`.
pub fn right_action(t: &Tensor12, g: &Matrix) -> Result<Tensor12> {
    check_n(t.n(), g.n())?;
    let n = t.n();
    let mut out = Tensor12::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut acc = 0.0;
                for l in 0..n {
                    for m in 0..n {
                        acc += t.get(i, l, m) * g[(l, j)] * g[(m, k)];
                    }
                }
                out.set(i, j, k, acc);
            }
        }
    }
    if t.is_symmetric() {
        out = out.symmetrized();
    }
    Ok(out)
}

/// Infinitesimal left action: `(xi·T)^l_jk = xi^l_i T^i_jk`.
pub fn inf_left_action(xi: &Matrix, t: &Tensor12) -> Result<Tensor12> {
    left_action(xi, t)
}

/// Infinitesimal right action, the derivative of [`right_action`] along
/// `exp(t xi)`: `(T·xi)^i_jk = T^i_lk xi^l_j + T^i_jl xi^l_k`.
pub fn inf_right_action(t: &Tensor12, xi: &Matrix) -> Result<Tensor12> {
    check_n(t.n(), xi.n())?;
    let n = t.n();
    let mut out = Tensor12::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut acc = 0.0;
                for l in 0..n {
                    acc += t.get(i, l, k) * xi[(l, j)] + t.get(i, j, l) * xi[(l, k)];
                }
                out.set(i, j, k, acc);
            }
        }
    }
    if t.is_symmetric() {
        out = out.symmetrized();
    }
    Ok(out)
}

/// Closed form of the heart operator on dual tensors:
///
/// ```text
/// (xi ♥ a)_i^jk = xi^l_i a_l^jk - a_i^lk xi^j_l - a_i^jl xi^k_l
/// ```
pub fn heart_direct(xi: &Matrix, alpha: &Tensor21) -> Result<Tensor21> {
    check_n(alpha.n(), xi.n())?;
    let n = alpha.n();
    let mut out = Tensor21::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut acc = 0.0;
                for l in 0..n {
                    acc += xi[(l, i)] * alpha.get(l, j, k)
                        - alpha.get(i, l, k) * xi[(j, l)]
                        - alpha.get(i, j, l) * xi[(k, l)];
                }
                out.set(i, j, k, acc);
            }
        }
    }
    Ok(out)
}

/// Closed form of the diamond operator:
///
/// ```text
/// (T ◇ a)^r_c = a_i^ck T^i_rk + a_i^jc T^i_jr - a_r^jk T^c_jk
/// ```
///
/// (summation over repeated indices; `(r, c)` is the matrix entry).
pub fn diamond_direct(t: &Tensor12, alpha: &Tensor21) -> Result<Matrix> {
    check_n(alpha.n(), t.n())?;
    let n = alpha.n();
    let mut out = Matrix::zeros(n);
    for r in 0..n {
        for c in 0..n {
            let mut acc = 0.0;
            for i in 0..n {
                for k in 0..n {
                    acc += alpha.get(i, c, k) * t.get(i, r, k);
                }
                for j in 0..n {
                    acc += alpha.get(i, j, c) * t.get(i, j, r);
                }
            }
            for j in 0..n {
                for k in 0..n {
                    acc -= alpha.get(r, j, k) * t.get(c, j, k);
                }
            }
            out[(r, c)] = acc;
        }
    }
    Ok(out)
}

/// The action pair `V = T^1_2(n)` (or its symmetric subspace `S^1_2(n)`),
/// with [`left_action`] and [`right_action`] as the two actions.
///
/// With `symmetric_only` the space is restricted to tensors symmetric in
/// the lower indices; both actions preserve that subspace, and the instance
/// re-symmetrizes outputs so the invariant holds exactly in floating point.
/// Callers must supply inputs from the subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct GlT12 {
    n: usize,
    symmetric_only: bool,
}

impl GlT12 {
    /// Instance over full `(1,2)`-tensors or the symmetric subspace.
    pub fn new(n: usize, symmetric_only: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("matrix side must be at least 1"));
        }
        Ok(GlT12 { n, symmetric_only })
    }

    /// Instance over all of `T^1_2(n)`.
    pub fn full(n: usize) -> Result<Self> {
        GlT12::new(n, false)
    }

    /// Instance over the symmetric subspace `S^1_2(n)`.
    pub fn symmetric(n: usize) -> Result<Self> {
        GlT12::new(n, true)
    }

    /// Whether this instance is restricted to the symmetric subspace.
    pub fn symmetric_only(&self) -> bool {
        self.symmetric_only
    }

    fn restrict(&self, t: Tensor12) -> Tensor12 {
        if self.symmetric_only && !t.is_symmetric() {
            t.symmetrized()
        } else {
            t
        }
    }
}

impl ActionPair for GlT12 {
    type V = Tensor12;
    type Dual = Tensor21;

    fn n(&self) -> usize {
        self.n
    }

    fn left_act(&self, g: &Matrix, v: &Tensor12) -> Result<Tensor12> {
        check_n(self.n, g.n())?;
        Ok(self.restrict(left_action(g, v)?))
    }

    fn right_act(&self, v: &Tensor12, g: &Matrix) -> Result<Tensor12> {
        check_n(self.n, g.n())?;
        Ok(self.restrict(right_action(v, g)?))
    }

    fn inf_left(&self, xi: &Matrix, v: &Tensor12) -> Result<Tensor12> {
        check_n(self.n, xi.n())?;
        Ok(self.restrict(inf_left_action(xi, v)?))
    }

    fn inf_right(&self, v: &Tensor12, xi: &Matrix) -> Result<Tensor12> {
        check_n(self.n, xi.n())?;
        Ok(self.restrict(inf_right_action(v, xi)?))
    }

    fn pair(&self, alpha: &Tensor21, v: &Tensor12) -> Result<f64> {
        check_n(self.n, alpha.n())?;
        tensor_pairing(alpha, v)
    }

    fn basis(&self) -> Vec<Tensor12> {
        if self.symmetric_only {
            sym12_basis(self.n)
        } else {
            tensor12_units(self.n)
        }
    }

    fn dual_basis(&self) -> Vec<Tensor21> {
        if self.symmetric_only {
            sym21_dual_basis(self.n)
        } else {
            tensor21_units(self.n)
        }
    }

    fn zero_v(&self) -> Tensor12 {
        if self.symmetric_only {
            Tensor12::zeros_symmetric(self.n)
        } else {
            Tensor12::zeros(self.n)
        }
    }

    fn zero_dual(&self) -> Tensor21 {
        Tensor21::zeros(self.n)
    }

    fn random_v<R: Rng + ?Sized>(&self, rng: &mut R) -> Tensor12 {
        if self.symmetric_only {
            sampling::random_sym12(self.n, rng)
        } else {
            sampling::random_tensor12(self.n, rng)
        }
    }

    fn random_dual<R: Rng + ?Sized>(&self, rng: &mut R) -> Tensor21 {
        if self.symmetric_only {
            sampling::random_sym21(self.n, rng)
        } else {
            sampling::random_tensor21(self.n, rng)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LinearSpace;

    #[test]
    fn left_action_scales_upper_index() {
        let g = Matrix::diagonal(&[2.0, 3.0]);
        let t = Tensor12::unit(2, 0, 1, 1);
        let out = left_action(&g, &t).unwrap();
        assert_eq!(out, Tensor12::unit(2, 0, 1, 1).scale(2.0));
    }

    #[test]
    fn right_action_scales_both_lower_indices() {
        let g = Matrix::diagonal(&[2.0, 3.0]);
        let t = Tensor12::unit(2, 0, 1, 1);
        let out = right_action(&t, &g).unwrap();
        assert_eq!(out, Tensor12::unit(2, 0, 1, 1).scale(9.0));
    }

    #[test]
    fn inf_right_moves_one_lower_index_at_a_time() {
        let t = Tensor12::unit(2, 0, 1, 1);
        let xi = Matrix::unit(2, 1, 0);
        let out = inf_right_action(&t, &xi).unwrap();
        let expected = Tensor12::unit(2, 0, 0, 1).add(&Tensor12::unit(2, 0, 1, 0));
        assert_eq!(out, expected);
    }

    #[test]
    fn heart_of_identity_negates() {
        let mut rng = sampling::rng_from_seed(3);
        let alpha = sampling::random_tensor21(2, &mut rng);
        let out = heart_direct(&Matrix::identity(2), &alpha).unwrap();
        assert!(out.sub(&alpha.scale(-1.0)).max_abs() < 1e-15);
    }

    #[test]
    fn diamond_of_unit_pair() {
        let t = Tensor12::unit(2, 0, 1, 1);
        let alpha = Tensor21::unit(2, 0, 1, 1);
        let out = diamond_direct(&t, &alpha).unwrap();
        let expected = Matrix::unit(2, 1, 1).scale(2.0).sub(&Matrix::unit(2, 0, 0));
        assert_eq!(out, expected);
    }

    #[test]
    fn closed_forms_match_generic_assembly() {
        for act in [GlT12::full(2).unwrap(), GlT12::symmetric(2).unwrap()] {
            let mut rng = sampling::rng_from_seed(5);
            for _ in 0..20 {
                let xi = sampling::random_matrix(2, &mut rng);
                let v = act.random_v(&mut rng);
                let alpha = act.random_dual(&mut rng);
                let heart_closed = heart_direct(&xi, &alpha).unwrap();
                let heart_generic = act.heart(&xi, &alpha).unwrap();
                assert!(heart_generic.sub(&heart_closed).max_abs() < 1e-13);
                let diamond_closed = diamond_direct(&v, &alpha).unwrap();
                let diamond_generic = act.diamond(&v, &alpha).unwrap();
                assert!(diamond_generic.sub(&diamond_closed).max_abs() < 1e-13);
            }
        }
    }

    #[test]
    fn symmetric_instance_keeps_subspace() {
        let act = GlT12::symmetric(3).unwrap();
        let mut rng = sampling::rng_from_seed(9);
        let g = sampling::random_group_matrix(3, &mut rng);
        let v = act.random_v(&mut rng);
        for out in [
            act.left_act(&g, &v).unwrap(),
            act.right_act(&v, &g).unwrap(),
            act.inf_left(&g, &v).unwrap(),
            act.inf_right(&v, &g).unwrap(),
        ] {
            assert!(out.is_symmetric());
            assert_eq!(out.max_asymmetry(), 0.0);
        }
    }
}
