//! Euler-Poincare dynamics on the product algebra: quadratic reduced
//! Lagrangians, the right/left-trivialized and advected evolution equations,
//! fixed-step RK4 integration with group reconstruction, and diagnostics
//! (energy, transported momentum, a discrete variational-derivative check).

mod action;
mod ep;
mod integrate;
mod lagrangian;

pub use action::{action_gradient_check, VariationCurve};
pub use ep::{
    ep_rhs_advected, ep_rhs_left, ep_rhs_right, induced_variation, left_trivialize,
    noether_momentum, reconstruct_rhs_left, reconstruct_rhs_right, right_trivialize, GroupTangent,
};
pub use integrate::{
    integrate, rk4_step, EpSetup, OdeState, Orientation, Trajectory, TrajectorySample,
};
pub use lagrangian::QuadraticLagrangian;
