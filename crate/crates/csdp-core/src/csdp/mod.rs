//! The centered semi-direct product construction, generic over a pair of
//! commuting left/right actions of `GL(n)` on a vector space `V`.
//!
//! [`ActionPair`] supplies the two actions, their infinitesimal versions, a
//! duality pairing, and biorthogonal bases; everything else is derived:
//! group composition and inversion, conjugation, the adjoint and coadjoint
//! representations, the Lie bracket, and the two dual-space operators
//! ([`ActionPair::heart`] and [`ActionPair::diamond`]) that drive the
//! Euler-Poincare equations.

mod action_pair;
mod elements;
mod verify;

pub use action_pair::ActionPair;
pub use elements::{AlgebraElement, CoalgebraElement, GroupElement};
pub use verify::{structure_suite, verify_action_pair, LawCheck, SuiteReport};
