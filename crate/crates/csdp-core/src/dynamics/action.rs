use alloc::vec::Vec;

use rand::Rng;

use super::ep::induced_variation;
use super::integrate::Trajectory;
use super::lagrangian::QuadraticLagrangian;
use crate::algebra::{LinearSpace, Matrix};
use crate::csdp::{ActionPair, AlgebraElement};
use crate::error::{Error, Result};
use crate::scalar;

/// A sampled variation curve `eta(t)` in the algebra, together with its
/// analytic time derivative, vanishing at both endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct VariationCurve<V> {
    eta: Vec<AlgebraElement<V>>,
    eta_dot: Vec<AlgebraElement<V>>,
}

impl<V: LinearSpace> VariationCurve<V> {
    /// Build from explicit samples of `eta` and `d(eta)/dt` on the same
    /// uniform grid. The endpoint values of `eta` must vanish for
    /// [`action_gradient_check`] to be meaningful; this is not enforced.
    pub fn from_samples(
        eta: Vec<AlgebraElement<V>>,
        eta_dot: Vec<AlgebraElement<V>>,
    ) -> Result<Self> {
        if eta.len() < 2 {
            return Err(Error::InvalidArgument("need at least two samples"));
        }
        if eta.len() != eta_dot.len() {
            return Err(Error::DimensionMismatch {
                expected: eta.len(),
                found: eta_dot.len(),
            });
        }
        Ok(VariationCurve { eta, eta_dot })
    }

    /// Random superposition of sine modes `sin(pi k t / T)` with amplitudes
    /// `~ scale / k`, sampled on `samples` uniform points spanning
    /// `total_time`. Endpoint values are exactly zero.
    pub fn sine_modes<A, R>(
        act: &A,
        samples: usize,
        total_time: f64,
        modes: usize,
        scale: f64,
        rng: &mut R,
    ) -> Result<Self>
    where
        A: ActionPair<V = V>,
        R: Rng + ?Sized,
    {
        if samples < 2 {
            return Err(Error::InvalidArgument("need at least two samples"));
        }
        if modes == 0 {
            return Err(Error::InvalidArgument("need at least one mode"));
        }
        if !(total_time.is_finite() && total_time > 0.0) {
            return Err(Error::InvalidArgument("total time must be positive"));
        }
        let coefficients: Vec<AlgebraElement<V>> = (1..=modes)
            .map(|k| act.random_algebra(rng).scale(scale / k as f64))
            .collect();
        let zero = AlgebraElement::new(Matrix::zeros(act.n()), act.zero_v());
        let segments = samples - 1;
        let mut eta = Vec::with_capacity(samples);
        let mut eta_dot = Vec::with_capacity(samples);
        for i in 0..samples {
            let fraction = i as f64 / segments as f64;
            let mut e = zero.clone();
            let mut de = zero.clone();
            for (k, c) in coefficients.iter().enumerate() {
                let k = (k + 1) as f64;
                let phase = core::f64::consts::PI * k * fraction;
                let rate = core::f64::consts::PI * k / total_time;
                if i > 0 && i < segments {
                    e = e.axpy(scalar::sin(phase), c);
                }
                de = de.axpy(rate * scalar::cos(phase), c);
            }
            eta.push(e);
            eta_dot.push(de);
        }
        Ok(VariationCurve { eta, eta_dot })
    }

    /// Number of samples.
    pub fn len(&self) -> usize {
        self.eta.len()
    }

    /// Whether the curve has no samples (never true for constructed curves).
    pub fn is_empty(&self) -> bool {
        self.eta.is_empty()
    }

    /// Samples of `eta`.
    pub fn eta(&self) -> &[AlgebraElement<V>] {
        &self.eta
    }

    /// Samples of `d(eta)/dt`.
    pub fn eta_dot(&self) -> &[AlgebraElement<V>] {
        &self.eta_dot
    }
}

/// First-order change of the discrete action along each variation curve:
///
/// ```text
/// c = trapezoid_t <m(t), d(eta)/dt - [xi(t), eta(t)]>
/// ```
///
/// For a right-trivialized Euler-Poincare solution the integrand is a total
/// derivative of a quantity vanishing at the endpoints, so `c` shrinks at
/// second order as the grid refines; for a non-solution curve it stays at
/// the scale of the data. Returns one signed coefficient per curve.
pub fn action_gradient_check<A: ActionPair>(
    act: &A,
    l: &QuadraticLagrangian,
    trajectory: &Trajectory<A::V, A::Dual>,
    curves: &[VariationCurve<A::V>],
) -> Result<Vec<f64>> {
    l.check_dims(act)?;
    let samples = &trajectory.samples;
    let mut out = Vec::with_capacity(curves.len());
    for curve in curves {
        if curve.len() != samples.len() {
            return Err(Error::DimensionMismatch {
                expected: samples.len(),
                found: curve.len(),
            });
        }
        let mut acc = 0.0;
        let last = samples.len() - 1;
        for (i, sample) in samples.iter().enumerate() {
            let delta_xi =
                induced_variation(act, &sample.velocity, &curve.eta[i], &curve.eta_dot[i])?;
            let weight = if i == 0 || i == last { 0.5 } else { 1.0 };
            acc += weight * act.pair_full(&sample.momentum, &delta_xi)?;
        }
        out.push(acc * trajectory.step);
    }
    Ok(out)
}
