use super::lagrangian::QuadraticLagrangian;
use crate::algebra::{LinearSpace, Matrix};
use crate::csdp::{ActionPair, AlgebraElement, CoalgebraElement, GroupElement};
use crate::error::Result;

/// Tangent data `(dg, dv)` at a group element.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupTangent<V> {
    /// Time derivative of the matrix part.
    pub dg: Matrix,
    /// Time derivative of the vector part.
    pub dv: V,
}

/// Right-trivialized Euler-Poincare equation: with `m = dl/dxi`,
///
/// ```text
/// dm/dt = -ad*_xi m
/// ```
///
/// componentwise `dmu/dt = -(xi_g^T mu - mu xi_g^T) - xi_v ◇ gamma` and
/// `dgamma/dt = -xi_g ♥ gamma`.
pub fn ep_rhs_right<A: ActionPair>(
    act: &A,
    l: &QuadraticLagrangian,
    xi: &AlgebraElement<A::V>,
) -> Result<CoalgebraElement<A::Dual>> {
    let m = l.legendre(act, xi)?;
    Ok(act.coadjoint(xi, &m)?.scale(-1.0))
}

/// Left-trivialized Euler-Poincare equation, the sign flip of
/// [`ep_rhs_right`]: `dm/dt = +ad*_xi m`.
pub fn ep_rhs_left<A: ActionPair>(
    act: &A,
    l: &QuadraticLagrangian,
    xi: &AlgebraElement<A::V>,
) -> Result<CoalgebraElement<A::Dual>> {
    let m = l.legendre(act, xi)?;
    act.coadjoint(xi, &m)
}

/// Right-trivialized equations with an advected vector parameter: the
/// algebra variable is `xi_g` alone, `v` is carried along the flow.
///
/// ```text
/// dmu/dt = -(xi_g^T mu - mu xi_g^T) - v ◇ (dl/dv)
/// dv/dt  = xi_g · v + v · xi_g
/// ```
///
/// Returns `(dmu/dt, dv/dt)`.
pub fn ep_rhs_advected<A: ActionPair>(
    act: &A,
    l: &QuadraticLagrangian,
    xi_g: &Matrix,
    v: &A::V,
) -> Result<(Matrix, A::V)> {
    let mu = l.matrix_momentum(act, xi_g)?;
    let xi_t = xi_g.transpose();
    let coad = xi_t.multiply(&mu)?.sub(&mu.multiply(&xi_t)?);
    let gamma_v = l.v_momentum(act, v)?;
    let dmu = coad.add(&act.diamond(v, &gamma_v)?).scale(-1.0);
    let dv = act.inf_left(xi_g, v)?.add(&act.inf_right(v, xi_g)?);
    Ok((dmu, dv))
}

/// Reconstruction for the right-trivialized flow: the tangent of
/// `t -> (exp(t xi_g), t xi_v) * (g, v)` at `t = 0`,
///
/// ```text
/// dg = xi_g g,   dv = xi_g · v + xi_v · g
/// ```
pub fn reconstruct_rhs_right<A: ActionPair>(
    act: &A,
    xi: &AlgebraElement<A::V>,
    at: &GroupElement<A::V>,
) -> Result<GroupTangent<A::V>> {
    let dg = xi.xi_g.multiply(&at.g)?;
    let dv = act
        .inf_left(&xi.xi_g, &at.v)?
        .add(&act.right_act(&xi.xi_v, &at.g)?);
    Ok(GroupTangent { dg, dv })
}

/// Reconstruction for the left-trivialized flow: the tangent of
/// `t -> (g, v) * (exp(t xi_g), t xi_v)` at `t = 0`,
///
/// ```text
/// dg = g xi_g,   dv = g · xi_v + v · xi_g
/// ```
pub fn reconstruct_rhs_left<A: ActionPair>(
    act: &A,
    xi: &AlgebraElement<A::V>,
    at: &GroupElement<A::V>,
) -> Result<GroupTangent<A::V>> {
    let dg = at.g.multiply(&xi.xi_g)?;
    let dv = act
        .left_act(&at.g, &xi.xi_v)?
        .add(&act.inf_right(&at.v, &xi.xi_g)?);
    Ok(GroupTangent { dg, dv })
}

/// Invert [`reconstruct_rhs_right`]: recover the right-trivialized velocity
/// from tangent data,
///
/// ```text
/// xi_g = dg g^-1,   xi_v = (dv - xi_g · v) · g^-1
/// ```
pub fn right_trivialize<A: ActionPair>(
    act: &A,
    at: &GroupElement<A::V>,
    tangent: &GroupTangent<A::V>,
) -> Result<AlgebraElement<A::V>> {
    let g_inv = at.g.inverse()?;
    let xi_g = tangent.dg.multiply(&g_inv)?;
    let xi_v = act.right_act(&tangent.dv.sub(&act.inf_left(&xi_g, &at.v)?), &g_inv)?;
    Ok(AlgebraElement::new(xi_g, xi_v))
}

/// Invert [`reconstruct_rhs_left`]: recover the left-trivialized velocity,
///
/// ```text
/// xi_g = g^-1 dg,   xi_v = g^-1 · (dv - v · xi_g)
/// ```
pub fn left_trivialize<A: ActionPair>(
    act: &A,
    at: &GroupElement<A::V>,
    tangent: &GroupTangent<A::V>,
) -> Result<AlgebraElement<A::V>> {
    let g_inv = at.g.inverse()?;
    let xi_g = g_inv.multiply(&tangent.dg)?;
    let xi_v = act.left_act(&g_inv, &tangent.dv.sub(&act.inf_right(&at.v, &xi_g)?))?;
    Ok(AlgebraElement::new(xi_g, xi_v))
}

/// Variation of the right-trivialized velocity induced by a variation
/// curve: for `eta = (delta g) g^-1`,
///
/// ```text
/// delta xi = d(eta)/dt - [xi, eta]
/// ```
pub fn induced_variation<A: ActionPair>(
    act: &A,
    xi: &AlgebraElement<A::V>,
    eta: &AlgebraElement<A::V>,
    eta_dot: &AlgebraElement<A::V>,
) -> Result<AlgebraElement<A::V>> {
    Ok(eta_dot.sub(&act.bracket(xi, eta)?))
}

/// Momentum transported by the group coadjoint, `Ad*_a m`.
///
/// Along a right-trivialized Euler-Poincare flow this is a constant of
/// motion; along a left-trivialized flow the same holds with `a` replaced
/// by its inverse.
pub fn noether_momentum<A: ActionPair>(
    act: &A,
    a: &GroupElement<A::V>,
    m: &CoalgebraElement<A::Dual>,
) -> Result<CoalgebraElement<A::Dual>> {
    act.group_coadjoint(a, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{GlMat, GlT12};
    use crate::sampling;

    #[test]
    fn trivialize_inverts_reconstruction() {
        let act = GlT12::symmetric(2).unwrap();
        let mut rng = sampling::rng_from_seed(31);
        for _ in 0..10 {
            let at = act.random_element(&mut rng);
            let xi = act.random_algebra(&mut rng);
            let tangent = reconstruct_rhs_right(&act, &xi, &at).unwrap();
            let back = right_trivialize(&act, &at, &tangent).unwrap();
            assert!(back.sub(&xi).max_abs() < 1e-10);

            let tangent = reconstruct_rhs_left(&act, &xi, &at).unwrap();
            let back = left_trivialize(&act, &at, &tangent).unwrap();
            assert!(back.sub(&xi).max_abs() < 1e-10);
        }
    }

    #[test]
    fn ep_right_matches_coadjoint_of_momentum() {
        let act = GlMat::new(2).unwrap();
        let l = QuadraticLagrangian::isotropic(&act);
        let mut rng = sampling::rng_from_seed(32);
        let xi = act.random_algebra(&mut rng);
        let m = l.legendre(&act, &xi).unwrap();
        let direct = act.coadjoint(&xi, &m).unwrap().scale(-1.0);
        let rhs = ep_rhs_right(&act, &l, &xi).unwrap();
        assert!(rhs.sub(&direct).max_abs() < 1e-15);
        let flipped = ep_rhs_left(&act, &l, &xi).unwrap();
        assert!(rhs.add(&flipped).max_abs() < 1e-15);
    }

    #[test]
    fn advected_rhs_scalar_case() {
        let act = GlMat::new(1).unwrap();
        let l = QuadraticLagrangian::isotropic(&act);
        let xi = Matrix::diagonal(&[0.5]);
        let v = Matrix::diagonal(&[2.0]);
        let (dmu, dv) = ep_rhs_advected(&act, &l, &xi, &v).unwrap();
        // Scalars commute: the coadjoint and diamond terms vanish, and
        // dv/dt = 2 xi v.
        assert_eq!(dmu, Matrix::zeros(1));
        assert_eq!(dv, Matrix::diagonal(&[2.0]));
    }

    #[test]
    fn noether_transport_duality() {
        let act = GlT12::full(2).unwrap();
        let mut rng = sampling::rng_from_seed(33);
        let a = act.random_element(&mut rng);
        let m = act.random_momentum(&mut rng);
        let x = act.random_algebra(&mut rng);
        let transported = noether_momentum(&act, &a, &m).unwrap();
        let lhs = act.pair_full(&transported, &x).unwrap();
        let rhs = act.pair_full(&m, &act.adjoint(&a, &x).unwrap()).unwrap();
        assert!((lhs - rhs).abs() < 1e-10);
    }
}
