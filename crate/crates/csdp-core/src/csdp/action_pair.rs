use alloc::vec::Vec;

use rand::Rng;

use super::elements::{AlgebraElement, CoalgebraElement, GroupElement};
use crate::algebra::{LinearSpace, Matrix, Tolerances};
use crate::error::{Error, Result};

/// A pair of commuting left and right actions of `GL(n)` on a vector space
/// `V`, the data needed to form the centered semi-direct product `G ⋈ V`
/// with composition
///
/// ```text
/// (g1, v1) * (g2, v2) = (g1 g2, g1·v2 + v1·g2)
/// ```
///
/// Implementors supply the four action maps, a duality pairing with `V*`,
/// and biorthogonal bases of `V` and `V*`. The provided methods derive the
/// group structure, the Lie bracket, the adjoint and coadjoint
/// representations, and the dual-space operators [`heart`](Self::heart) and
/// [`diamond`](Self::diamond) from those ingredients alone, so a new
/// instance only has to get its actions right.
///
/// Composition is associative precisely because the two actions commute;
/// [`super::verify_action_pair`] checks that numerically.
pub trait ActionPair {
    /// The vector space being acted on.
    type V: LinearSpace;
    /// Its dual under [`pair`](Self::pair).
    type Dual: LinearSpace;

    /// Side length of the matrices in `G`.
    fn n(&self) -> usize;

    /// Left action `g · v`.
    fn left_act(&self, g: &Matrix, v: &Self::V) -> Result<Self::V>;

    /// Right action `v · g`.
    fn right_act(&self, v: &Self::V, g: &Matrix) -> Result<Self::V>;

    /// Infinitesimal left action `xi · v`, the derivative of
    /// `exp(t xi) · v` at `t = 0`.
    fn inf_left(&self, xi: &Matrix, v: &Self::V) -> Result<Self::V>;

    /// Infinitesimal right action `v · xi`.
    fn inf_right(&self, v: &Self::V, xi: &Matrix) -> Result<Self::V>;

    /// Duality pairing `<alpha, v>`.
    fn pair(&self, alpha: &Self::Dual, v: &Self::V) -> Result<f64>;

    /// Basis of `V`.
    fn basis(&self) -> Vec<Self::V>;

    /// Basis of `V*` biorthogonal to [`basis`](Self::basis):
    /// `<dual_basis[a], basis[b]> = delta_ab`.
    fn dual_basis(&self) -> Vec<Self::Dual>;

    /// Zero vector of `V`.
    fn zero_v(&self) -> Self::V;

    /// Zero vector of `V*`.
    fn zero_dual(&self) -> Self::Dual;

    /// Random element of `V` with components of order one.
    fn random_v<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::V;

    /// Random element of `V*` with components of order one.
    fn random_dual<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Dual;

    /// Dimension of `V`.
    fn v_dim(&self) -> usize {
        self.basis().len()
    }

    /// Identity element `(I, 0)`.
    fn identity_element(&self) -> GroupElement<Self::V> {
        GroupElement::new(Matrix::identity(self.n()), self.zero_v())
    }

    /// Group composition `(g1 g2, g1·v2 + v1·g2)`.
    fn compose(
        &self,
        a: &GroupElement<Self::V>,
        b: &GroupElement<Self::V>,
    ) -> Result<GroupElement<Self::V>> {
        let g = a.g.multiply(&b.g)?;
        let v = self.left_act(&a.g, &b.v)?.add(&self.right_act(&a.v, &b.g)?);
        Ok(GroupElement::new(g, v))
    }

    /// Group inverse `(g^-1, -g^-1·v·g^-1)`.
    fn inverse(&self, a: &GroupElement<Self::V>) -> Result<GroupElement<Self::V>> {
        self.inverse_with_tol(a, Tolerances::default().sing_tol)
    }

    /// [`inverse`](Self::inverse) with an explicit singularity threshold.
    fn inverse_with_tol(
        &self,
        a: &GroupElement<Self::V>,
        sing_tol: f64,
    ) -> Result<GroupElement<Self::V>> {
        let g_inv = a.g.inverse_with_tol(sing_tol)?;
        let v = self
            .left_act(&g_inv, &self.right_act(&a.v, &g_inv)?)?
            .scale(-1.0);
        Ok(GroupElement::new(g_inv, v))
    }

    /// Conjugation `AD_a(b) = a b a^-1`.
    fn conjugate(
        &self,
        a: &GroupElement<Self::V>,
        b: &GroupElement<Self::V>,
    ) -> Result<GroupElement<Self::V>> {
        self.compose(&self.compose(a, b)?, &self.inverse(a)?)
    }

    /// Adjoint representation `Ad_a = d(AD_a)` at the identity:
    ///
    /// ```text
    /// Ad_(g,v)(xi, u) = (g xi g^-1,
    ///                    g·u·g^-1 + (v·xi)·g^-1 - (g xi g^-1)·(v·g^-1))
    /// ```
    fn adjoint(
        &self,
        a: &GroupElement<Self::V>,
        x: &AlgebraElement<Self::V>,
    ) -> Result<AlgebraElement<Self::V>> {
        let g_inv = a.g.inverse()?;
        let ad_g = a.g.multiply(&x.xi_g)?.multiply(&g_inv)?;
        let term_u = self.left_act(&a.g, &self.right_act(&x.xi_v, &g_inv)?)?;
        let term_v = self.right_act(&self.inf_right(&a.v, &x.xi_g)?, &g_inv)?;
        let term_mix = self.inf_left(&ad_g, &self.right_act(&a.v, &g_inv)?)?;
        Ok(AlgebraElement::new(
            ad_g,
            term_u.add(&term_v).sub(&term_mix),
        ))
    }

    /// Lie bracket on `g ⋉ V`:
    ///
    /// ```text
    /// [(x1, u1), (x2, u2)] = ([x1, x2],
    ///                         (x1·u2 + u1·x2) - (x2·u1 + u2·x1))
    /// ```
    fn bracket(
        &self,
        x: &AlgebraElement<Self::V>,
        y: &AlgebraElement<Self::V>,
    ) -> Result<AlgebraElement<Self::V>> {
        let g_part = x.xi_g.multiply(&y.xi_g)?.sub(&y.xi_g.multiply(&x.xi_g)?);
        let v_part = self
            .inf_left(&x.xi_g, &y.xi_v)?
            .add(&self.inf_right(&x.xi_v, &y.xi_g)?)
            .sub(&self.inf_left(&y.xi_g, &x.xi_v)?)
            .sub(&self.inf_right(&y.xi_v, &x.xi_g)?);
        Ok(AlgebraElement::new(g_part, v_part))
    }

    /// Heart operator `g x V* -> V*`, defined by
    /// `<xi ♥ alpha, v> = <alpha, xi·v - v·xi>`.
    ///
    /// Assembled generically from the biorthogonal bases; instances with a
    /// closed form keep it as a separate function so the two routes can be
    /// compared in tests.
    fn heart(&self, xi: &Matrix, alpha: &Self::Dual) -> Result<Self::Dual> {
        let basis = self.basis();
        let dual_basis = self.dual_basis();
        let mut out = self.zero_dual();
        for (e, f) in basis.iter().zip(dual_basis.iter()) {
            let moved = self.inf_left(xi, e)?.sub(&self.inf_right(e, xi)?);
            let c = self.pair(alpha, &moved)?;
            out = out.axpy(c, f);
        }
        Ok(out)
    }

    /// Diamond operator `V x V* -> g*`, defined by
    /// `<v ◇ alpha, xi> = <alpha, v·xi - xi·v>`.
    ///
    /// The matrix-unit basis of `gl(n)` is self-dual under the trace
    /// pairing, so the output entry `(i, j)` is the pairing against `E_ij`.
    fn diamond(&self, v: &Self::V, alpha: &Self::Dual) -> Result<Matrix> {
        let n = self.n();
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let e = Matrix::unit(n, i, j);
                let moved = self.inf_right(v, &e)?.sub(&self.inf_left(&e, v)?);
                out[(i, j)] = self.pair(alpha, &moved)?;
            }
        }
        Ok(out)
    }

    /// Coadjoint action of the algebra on its dual, defined by
    /// `<ad*_x m, y> = <m, [x, y]>`:
    ///
    /// ```text
    /// ad*_(xi,u)(mu, gamma) = (xi^T mu - mu xi^T + u ◇ gamma, xi ♥ gamma)
    /// ```
    ///
    /// The matrix block is the coadjoint of `gl(n)` under the trace pairing.
    fn coadjoint(
        &self,
        x: &AlgebraElement<Self::V>,
        m: &CoalgebraElement<Self::Dual>,
    ) -> Result<CoalgebraElement<Self::Dual>> {
        let xi_t = x.xi_g.transpose();
        let gl_block = xi_t.multiply(&m.mu)?.sub(&m.mu.multiply(&xi_t)?);
        let mu = gl_block.add(&self.diamond(&x.xi_v, &m.gamma)?);
        let gamma = self.heart(&x.xi_g, &m.gamma)?;
        Ok(CoalgebraElement::new(mu, gamma))
    }

    /// Coadjoint action of the group on the dual, defined by
    /// `<Ad*_a m, x> = <m, Ad_a x>`, assembled by pairing against the
    /// adjoint images of the basis. Along a right-trivialized
    /// Euler-Poincare flow `Ad*_a(t) m(t)` is a constant of motion.
    fn group_coadjoint(
        &self,
        a: &GroupElement<Self::V>,
        m: &CoalgebraElement<Self::Dual>,
    ) -> Result<CoalgebraElement<Self::Dual>> {
        let n = self.n();
        let zero_v = self.zero_v();
        let mut mu = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let image = self.adjoint(
                    a,
                    &AlgebraElement::new(Matrix::unit(n, i, j), zero_v.clone()),
                )?;
                mu[(i, j)] = self.pair_full(m, &image)?;
            }
        }
        let zero_g = Matrix::zeros(n);
        let mut gamma = self.zero_dual();
        for (e, f) in self.basis().iter().zip(self.dual_basis().iter()) {
            let image = self.adjoint(a, &AlgebraElement::new(zero_g.clone(), e.clone()))?;
            gamma = gamma.axpy(self.pair_full(m, &image)?, f);
        }
        Ok(CoalgebraElement::new(mu, gamma))
    }

    /// Full duality pairing `<(mu, gamma), (xi_g, xi_v)>`.
    fn pair_full(
        &self,
        m: &CoalgebraElement<Self::Dual>,
        x: &AlgebraElement<Self::V>,
    ) -> Result<f64> {
        if m.mu.n() != x.xi_g.n() {
            return Err(Error::DimensionMismatch {
                expected: m.mu.n(),
                found: x.xi_g.n(),
            });
        }
        Ok(m.mu.dot(&x.xi_g) + self.pair(&m.gamma, &x.xi_v)?)
    }

    /// Random algebra element with components of order one.
    fn random_algebra<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgebraElement<Self::V> {
        AlgebraElement::new(
            crate::sampling::random_matrix(self.n(), rng),
            self.random_v(rng),
        )
    }

    /// Random momentum with components of order one.
    fn random_momentum<R: Rng + ?Sized>(&self, rng: &mut R) -> CoalgebraElement<Self::Dual> {
        CoalgebraElement::new(
            crate::sampling::random_matrix(self.n(), rng),
            self.random_dual(rng),
        )
    }

    /// Random group element: matrix part `exp` of a uniform sample, vector
    /// part uniform.
    fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupElement<Self::V> {
        GroupElement::new(
            crate::sampling::random_group_matrix(self.n(), rng),
            self.random_v(rng),
        )
    }
}
