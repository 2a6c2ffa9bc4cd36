use alloc::vec::Vec;

use super::ep::{reconstruct_rhs_left, reconstruct_rhs_right};
use super::lagrangian::QuadraticLagrangian;
use crate::algebra::{LinearSpace, Matrix};
use crate::csdp::{ActionPair, AlgebraElement, CoalgebraElement, GroupElement};
use crate::error::{Error, Result};
use crate::scalar;

/// Which trivialization (or the advected variant) a flow uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Velocity `xi = (dg/dt) g^-1`; momentum equation `dm/dt = -ad*_xi m`.
    Right,
    /// Velocity `xi = g^-1 (dg/dt)`; momentum equation `dm/dt = +ad*_xi m`.
    Left,
    /// Right-trivialized matrix dynamics with `v` advected along the flow.
    Advected,
}

/// Initial data for [`integrate`], one variant per orientation.
#[derive(Debug, Clone, PartialEq)]
pub enum EpSetup<V> {
    /// Right-trivialized flow from an initial velocity.
    Right {
        /// Velocity at time zero.
        xi0: AlgebraElement<V>,
    },
    /// Left-trivialized flow from an initial velocity.
    Left {
        /// Velocity at time zero.
        xi0: AlgebraElement<V>,
    },
    /// Advected flow from an initial matrix velocity and vector value.
    Advected {
        /// Matrix velocity at time zero.
        xi0_g: Matrix,
        /// Advected vector at time zero.
        v0: V,
    },
}

impl<V> EpSetup<V> {
    /// The orientation this setup selects.
    pub fn orientation(&self) -> Orientation {
        match self {
            EpSetup::Right { .. } => Orientation::Right,
            EpSetup::Left { .. } => Orientation::Left,
            EpSetup::Advected { .. } => Orientation::Advected,
        }
    }
}

/// State that a fixed-step Runge-Kutta integrator can drive: a point of an
/// ambient linear space with a finiteness test.
pub trait OdeState: Clone {
    /// `self + c * dir`, componentwise.
    fn axpy(&self, c: f64, dir: &Self) -> Self;
    /// Whether every component is finite.
    fn is_finite(&self) -> bool;
}

/// One classical RK4 step of size `h` for `dy/dt = f(y)`.
pub fn rk4_step<S, F>(mut f: F, y: &S, h: f64) -> Result<S>
where
    S: OdeState,
    F: FnMut(&S) -> Result<S>,
{
    let k1 = f(y)?;
    let k2 = f(&y.axpy(0.5 * h, &k1))?;
    let k3 = f(&y.axpy(0.5 * h, &k2))?;
    let k4 = f(&y.axpy(h, &k3))?;
    Ok(y.axpy(h / 6.0, &k1)
        .axpy(h / 3.0, &k2)
        .axpy(h / 3.0, &k3)
        .axpy(h / 6.0, &k4))
}

/// One recorded instant of a flow.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySample<V, D> {
    /// Time of the sample.
    pub time: f64,
    /// Trivialized velocity; for advected flows the vector part is zero.
    pub velocity: AlgebraElement<V>,
    /// Momentum `(mu, gamma)`; for advected flows `gamma` is the dual image
    /// of the advected vector.
    pub momentum: CoalgebraElement<D>,
    /// Reconstructed group element; for advected flows the vector part
    /// holds the advected value.
    pub group: GroupElement<V>,
    /// Energy diagnostic (the conserved Hamiltonian for the right/left
    /// flows, the reduced Lagrangian value for advected ones).
    pub energy: f64,
    /// Max-norm drift of the transported conserved quantity since time
    /// zero: the group-coadjoint momentum for right/left flows, the
    /// pulled-back advected vector for advected flows.
    pub noether_residual: f64,
}

/// A fixed-step flow record, one sample per step including time zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<V, D> {
    /// Orientation of the flow.
    pub orientation: Orientation,
    /// Step size.
    pub step: f64,
    /// Samples at `t = 0, h, 2h, ...`.
    pub samples: Vec<TrajectorySample<V, D>>,
}

impl<V: LinearSpace, D: LinearSpace> Trajectory<V, D> {
    /// Sample at time zero.
    pub fn initial(&self) -> &TrajectorySample<V, D> {
        self.samples.first().expect("trajectory is never empty")
    }

    /// Final sample.
    pub fn last(&self) -> &TrajectorySample<V, D> {
        self.samples.last().expect("trajectory is never empty")
    }

    /// Time of the final sample.
    pub fn total_time(&self) -> f64 {
        self.last().time
    }

    /// Largest `|E(t) - E(0)|` over the samples.
    pub fn max_energy_drift(&self) -> f64 {
        let e0 = self.initial().energy;
        self.samples
            .iter()
            .fold(0.0, |acc, s| scalar::max(acc, scalar::abs(s.energy - e0)))
    }

    /// Largest transported-momentum residual over the samples.
    pub fn max_noether_residual(&self) -> f64 {
        self.samples
            .iter()
            .fold(0.0, |acc, s| scalar::max(acc, s.noether_residual))
    }

    /// Wrap an externally produced velocity curve as a trajectory, with
    /// momenta from the Legendre transform and trivial group/diagnostic
    /// fields. The result is not a solution of anything; it exists so that
    /// diagnostics like [`super::action_gradient_check`] can be pointed at
    /// arbitrary curves (e.g. as a negative control).
    pub fn from_velocities<A>(
        act: &A,
        l: &QuadraticLagrangian,
        velocities: Vec<AlgebraElement<A::V>>,
        step: f64,
    ) -> Result<Self>
    where
        A: ActionPair<V = V, Dual = D>,
    {
        if velocities.is_empty() {
            return Err(Error::InvalidArgument("velocity curve is empty"));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidArgument("step must be positive and finite"));
        }
        let mut samples = Vec::with_capacity(velocities.len());
        for (i, xi) in velocities.into_iter().enumerate() {
            let momentum = l.legendre(act, &xi)?;
            let energy = 0.5 * act.pair_full(&momentum, &xi)?;
            samples.push(TrajectorySample {
                time: i as f64 * step,
                velocity: xi,
                momentum,
                group: act.identity_element(),
                energy,
                noether_residual: 0.0,
            });
        }
        Ok(Trajectory {
            orientation: Orientation::Right,
            step,
            samples,
        })
    }
}

#[derive(Clone)]
struct MomentumState<V, D> {
    m: CoalgebraElement<D>,
    g: Matrix,
    v: V,
}

impl<V: LinearSpace, D: LinearSpace> OdeState for MomentumState<V, D> {
    fn axpy(&self, c: f64, dir: &Self) -> Self {
        MomentumState {
            m: self.m.axpy(c, &dir.m),
            g: self.g.axpy(c, &dir.g),
            v: self.v.axpy(c, &dir.v),
        }
    }

    fn is_finite(&self) -> bool {
        self.m.is_finite() && self.g.is_finite() && self.v.is_finite()
    }
}

#[derive(Clone)]
struct AdvectedState<V> {
    mu: Matrix,
    v: V,
    g_left: Matrix,
    g_right: Matrix,
}

impl<V: LinearSpace> OdeState for AdvectedState<V> {
    fn axpy(&self, c: f64, dir: &Self) -> Self {
        AdvectedState {
            mu: self.mu.axpy(c, &dir.mu),
            v: self.v.axpy(c, &dir.v),
            g_left: self.g_left.axpy(c, &dir.g_left),
            g_right: self.g_right.axpy(c, &dir.g_right),
        }
    }

    fn is_finite(&self) -> bool {
        self.mu.is_finite()
            && self.v.is_finite()
            && self.g_left.is_finite()
            && self.g_right.is_finite()
    }
}

/// Integrate an Euler-Poincare flow with fixed-step RK4, reconstructing the
/// group element alongside the momentum (or advected) variables.
///
/// The momentum flows integrate `(m, g, v)` with the velocity recovered
/// from `m` by the inverse Legendre transform at every stage. The advected
/// flow integrates `(mu, v)` together with the two one-sided reconstructions
/// `dg_L/dt = xi g_L` and `dg_R/dt = g_R xi`, whose sandwich
/// `g_L^-1 · v · g_R^-1` is the exact invariant reported as the residual.
///
/// Fails with [`Error::SingularReconstruction`] if a step leaves the
/// invertible locus or produces non-finite values.
pub fn integrate<A: ActionPair>(
    act: &A,
    l: &QuadraticLagrangian,
    setup: &EpSetup<A::V>,
    step: f64,
    steps: usize,
) -> Result<Trajectory<A::V, A::Dual>> {
    l.check_dims(act)?;
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidArgument("step must be positive and finite"));
    }
    if steps == 0 {
        return Err(Error::InvalidArgument("need at least one step"));
    }
    match setup {
        EpSetup::Right { xi0 } => integrate_momentum(act, l, xi0, step, steps, Orientation::Right),
        EpSetup::Left { xi0 } => integrate_momentum(act, l, xi0, step, steps, Orientation::Left),
        EpSetup::Advected { xi0_g, v0 } => integrate_advected(act, l, xi0_g, v0, step, steps),
    }
}

fn integrate_momentum<A: ActionPair>(
    act: &A,
    l: &QuadraticLagrangian,
    xi0: &AlgebraElement<A::V>,
    step: f64,
    steps: usize,
    orientation: Orientation,
) -> Result<Trajectory<A::V, A::Dual>> {
    let sign = match orientation {
        Orientation::Right => -1.0,
        Orientation::Left => 1.0,
        Orientation::Advected => unreachable!("advected flows use integrate_advected"),
    };

    let rhs = |s: &MomentumState<A::V, A::Dual>| -> Result<MomentumState<A::V, A::Dual>> {
        let xi = l.inverse_legendre(act, &s.m)?;
        let dm = act.coadjoint(&xi, &s.m)?.scale(sign);
        let at = GroupElement::new(s.g.clone(), s.v.clone());
        let tangent = match orientation {
            Orientation::Right => reconstruct_rhs_right(act, &xi, &at)?,
            _ => reconstruct_rhs_left(act, &xi, &at)?,
        };
        Ok(MomentumState {
            m: dm,
            g: tangent.dg,
            v: tangent.dv,
        })
    };

    let conserved = |s: &MomentumState<A::V, A::Dual>| -> Result<CoalgebraElement<A::Dual>> {
        let at = GroupElement::new(s.g.clone(), s.v.clone());
        let transport = match orientation {
            Orientation::Right => at,
            _ => act.inverse(&at)?,
        };
        act.group_coadjoint(&transport, &s.m)
    };

    let e0 = act.identity_element();
    let mut state = MomentumState {
        m: l.legendre(act, xi0)?,
        g: e0.g,
        v: e0.v,
    };
    let reference = conserved(&state)?;

    let sample =
        |s: &MomentumState<A::V, A::Dual>, time: f64| -> Result<TrajectorySample<A::V, A::Dual>> {
            let xi = l.inverse_legendre(act, &s.m)?;
            let energy = 0.5 * act.pair_full(&s.m, &xi)?;
            let residual = conserved(s)?.sub(&reference).max_abs();
            Ok(TrajectorySample {
                time,
                velocity: xi,
                momentum: s.m.clone(),
                group: GroupElement::new(s.g.clone(), s.v.clone()),
                energy,
                noether_residual: residual,
            })
        };

    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(sample(&state, 0.0)?);
    for k in 1..=steps {
        state =
            rk4_step(rhs, &state, step).map_err(|_| Error::SingularReconstruction { step: k })?;
        if !state.is_finite() {
            return Err(Error::SingularReconstruction { step: k });
        }
        let s = sample(&state, k as f64 * step)
            .map_err(|_| Error::SingularReconstruction { step: k })?;
        samples.push(s);
    }
    Ok(Trajectory {
        orientation,
        step,
        samples,
    })
}

fn integrate_advected<A: ActionPair>(
    act: &A,
    l: &QuadraticLagrangian,
    xi0_g: &Matrix,
    v0: &A::V,
    step: f64,
    steps: usize,
) -> Result<Trajectory<A::V, A::Dual>> {
    let rhs = |s: &AdvectedState<A::V>| -> Result<AdvectedState<A::V>> {
        let xi = l.matrix_from_momentum(act, &s.mu)?;
        let (dmu, dv) = super::ep::ep_rhs_advected(act, l, &xi, &s.v)?;
        Ok(AdvectedState {
            mu: dmu,
            v: dv,
            g_left: xi.multiply(&s.g_left)?,
            g_right: s.g_right.multiply(&xi)?,
        })
    };

    let mut state = AdvectedState {
        mu: l.matrix_momentum(act, xi0_g)?,
        v: v0.clone(),
        g_left: Matrix::identity(act.n()),
        g_right: Matrix::identity(act.n()),
    };

    let sample = |s: &AdvectedState<A::V>, time: f64| -> Result<TrajectorySample<A::V, A::Dual>> {
        let xi_g = l.matrix_from_momentum(act, &s.mu)?;
        let gamma = l.v_momentum(act, &s.v)?;
        let energy = 0.5 * s.mu.dot(&xi_g) + 0.5 * act.pair(&gamma, &s.v)?;
        let pulled_back = act.left_act(
            &s.g_left.inverse()?,
            &act.right_act(&s.v, &s.g_right.inverse()?)?,
        )?;
        let residual = pulled_back.sub(v0).max_abs();
        Ok(TrajectorySample {
            time,
            velocity: AlgebraElement::new(xi_g, act.zero_v()),
            momentum: CoalgebraElement::new(s.mu.clone(), gamma),
            group: GroupElement::new(s.g_left.clone(), s.v.clone()),
            energy,
            noether_residual: residual,
        })
    };

    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(sample(&state, 0.0)?);
    for k in 1..=steps {
        state =
            rk4_step(rhs, &state, step).map_err(|_| Error::SingularReconstruction { step: k })?;
        if !state.is_finite() {
            return Err(Error::SingularReconstruction { step: k });
        }
        let s = sample(&state, k as f64 * step)
            .map_err(|_| Error::SingularReconstruction { step: k })?;
        samples.push(s);
    }
    Ok(Trajectory {
        orientation: Orientation::Advected,
        step,
        samples,
    })
}
