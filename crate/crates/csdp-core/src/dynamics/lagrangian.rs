use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{LinearSpace, Matrix};
use crate::csdp::{ActionPair, AlgebraElement, CoalgebraElement};
use crate::error::{Error, Result};

/// Diagonal quadratic reduced Lagrangian
///
/// ```text
/// l(xi) = 1/2 sum_a wg[a] c_a(xi_g)^2 + 1/2 sum_b wv[b] d_b(xi_v)^2
/// ```
///
/// where `c_a` are matrix-unit coordinates of the `gl(n)` part and `d_b`
/// coordinates in the instance's `V` basis. All weights must be strictly
/// positive, which keeps the Legendre transform invertible.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticLagrangian {
    weights_g: Vec<f64>,
    weights_v: Vec<f64>,
}

impl QuadraticLagrangian {
    /// Build from explicit weights (`n^2` for the matrix part, `dim V` for
    /// the vector part).
    pub fn new(weights_g: Vec<f64>, weights_v: Vec<f64>) -> Result<Self> {
        for (index, w) in weights_g.iter().chain(weights_v.iter()).enumerate() {
            if !(w.is_finite() && *w > 0.0) {
                return Err(Error::NonPositiveWeight { index });
            }
        }
        Ok(QuadraticLagrangian {
            weights_g,
            weights_v,
        })
    }

    /// Unit weights sized for an instance.
    pub fn isotropic<A: ActionPair>(act: &A) -> Self {
        QuadraticLagrangian {
            weights_g: vec![1.0; act.n() * act.n()],
            weights_v: vec![1.0; act.v_dim()],
        }
    }

    /// Matrix-part weights.
    pub fn weights_g(&self) -> &[f64] {
        &self.weights_g
    }

    /// Vector-part weights.
    pub fn weights_v(&self) -> &[f64] {
        &self.weights_v
    }

    /// Check the weight vectors fit an instance.
    pub fn check_dims<A: ActionPair>(&self, act: &A) -> Result<()> {
        if self.weights_g.len() != act.n() * act.n() {
            return Err(Error::DimensionMismatch {
                expected: act.n() * act.n(),
                found: self.weights_g.len(),
            });
        }
        if self.weights_v.len() != act.v_dim() {
            return Err(Error::DimensionMismatch {
                expected: act.v_dim(),
                found: self.weights_v.len(),
            });
        }
        Ok(())
    }

    /// Value `l(xi)`.
    pub fn value<A: ActionPair>(&self, act: &A, xi: &AlgebraElement<A::V>) -> Result<f64> {
        let m = self.legendre(act, xi)?;
        Ok(0.5 * act.pair_full(&m, xi)?)
    }

    /// Legendre transform `xi -> (mu, gamma) = dl/dxi`: each coordinate is
    /// scaled by its weight, with `gamma` assembled in the dual basis.
    pub fn legendre<A: ActionPair>(
        &self,
        act: &A,
        xi: &AlgebraElement<A::V>,
    ) -> Result<CoalgebraElement<A::Dual>> {
        self.check_dims(act)?;
        if xi.xi_g.n() != act.n() {
            return Err(Error::DimensionMismatch {
                expected: act.n(),
                found: xi.xi_g.n(),
            });
        }
        let mut mu_flat = xi.xi_g.to_vec();
        for (x, w) in mu_flat.iter_mut().zip(&self.weights_g) {
            *x *= w;
        }
        let mu = Matrix::from_flat(act.n(), &mu_flat)?;
        let gamma = self.v_momentum(act, &xi.xi_v)?;
        Ok(CoalgebraElement::new(mu, gamma))
    }

    /// Dual-side image of a vector `v`: `sum_b wv[b] <f_b, v> f_b`, the
    /// derivative of the quadratic form on `V`.
    pub fn v_momentum<A: ActionPair>(&self, act: &A, v: &A::V) -> Result<A::Dual> {
        let dual_basis = act.dual_basis();
        if self.weights_v.len() != dual_basis.len() {
            return Err(Error::DimensionMismatch {
                expected: dual_basis.len(),
                found: self.weights_v.len(),
            });
        }
        let mut out = act.zero_dual();
        for (f, w) in dual_basis.iter().zip(&self.weights_v) {
            let coord = act.pair(f, v)?;
            out = out.axpy(w * coord, f);
        }
        Ok(out)
    }

    /// Inverse Legendre transform `(mu, gamma) -> xi`: coordinates divided
    /// by their weights.
    pub fn inverse_legendre<A: ActionPair>(
        &self,
        act: &A,
        m: &CoalgebraElement<A::Dual>,
    ) -> Result<AlgebraElement<A::V>> {
        self.check_dims(act)?;
        if m.mu.n() != act.n() {
            return Err(Error::DimensionMismatch {
                expected: act.n(),
                found: m.mu.n(),
            });
        }
        let xi_g = self.matrix_from_momentum(act, &m.mu)?;
        let basis = act.basis();
        let mut xi_v = act.zero_v();
        for (e, w) in basis.iter().zip(&self.weights_v) {
            let coord = act.pair(&m.gamma, e)?;
            xi_v = xi_v.axpy(coord / w, e);
        }
        Ok(AlgebraElement::new(xi_g, xi_v))
    }

    /// Matrix block of the Legendre transform alone.
    pub fn matrix_momentum<A: ActionPair>(&self, act: &A, xi_g: &Matrix) -> Result<Matrix> {
        if xi_g.n() != act.n() {
            return Err(Error::DimensionMismatch {
                expected: act.n(),
                found: xi_g.n(),
            });
        }
        let mut flat = xi_g.to_vec();
        for (x, w) in flat.iter_mut().zip(&self.weights_g) {
            *x *= w;
        }
        Matrix::from_flat(act.n(), &flat)
    }

    /// Matrix block of the inverse Legendre transform.
    pub fn matrix_from_momentum<A: ActionPair>(&self, act: &A, mu: &Matrix) -> Result<Matrix> {
        if mu.n() != act.n() {
            return Err(Error::DimensionMismatch {
                expected: act.n(),
                found: mu.n(),
            });
        }
        let mut flat = mu.to_vec();
        for (x, w) in flat.iter_mut().zip(&self.weights_g) {
            *x /= w;
        }
        Matrix::from_flat(act.n(), &flat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{GlMat, GlT12};
    use crate::sampling;

    #[test]
    fn legendre_round_trip_glmat() {
        let act = GlMat::new(2).unwrap();
        let l =
            QuadraticLagrangian::new(vec![1.0, 2.0, 3.0, 4.0], vec![0.5, 1.5, 2.5, 3.5]).unwrap();
        let mut rng = sampling::rng_from_seed(17);
        let xi = act.random_algebra(&mut rng);
        let m = l.legendre(&act, &xi).unwrap();
        let back = l.inverse_legendre(&act, &m).unwrap();
        assert!(back.sub(&xi).max_abs() < 1e-14);
    }

    #[test]
    fn legendre_round_trip_symmetric_tensors() {
        let act = GlT12::symmetric(2).unwrap();
        let weights_v: Vec<f64> = (0..act.v_dim()).map(|b| 1.0 + b as f64).collect();
        let l = QuadraticLagrangian::new(vec![1.0; 4], weights_v).unwrap();
        let mut rng = sampling::rng_from_seed(18);
        let xi = act.random_algebra(&mut rng);
        let m = l.legendre(&act, &xi).unwrap();
        let back = l.inverse_legendre(&act, &m).unwrap();
        assert!(back.sub(&xi).max_abs() < 1e-14);
    }

    #[test]
    fn energy_of_unit_momentum() {
        let act = GlMat::new(2).unwrap();
        let l = QuadraticLagrangian::isotropic(&act);
        let xi = AlgebraElement::new(Matrix::unit(2, 0, 1), Matrix::zeros(2));
        assert_eq!(l.value(&act, &xi).unwrap(), 0.5);
    }

    #[test]
    fn rejects_nonpositive_weights() {
        assert!(QuadraticLagrangian::new(vec![1.0, 0.0], vec![]).is_err());
        assert!(QuadraticLagrangian::new(vec![1.0], vec![-2.0]).is_err());
    }
}
