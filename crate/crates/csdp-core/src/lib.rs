//! Centered semi-direct products `G ⋈ V` of a Lie group with a bimodule,
//! together with the concrete instances over `GL(n)` and the dynamics that
//! live on them.
//!
//! The composition law is
//!
//! ```text
//! (g1, v1) * (g2, v2) = (g1 g2, g1·v2 + v1·g2)
//! ```
//!
//! where `g·v` and `v·g` are commuting left and right actions of `G` on the
//! vector space `V`. The [`csdp::ActionPair`] trait captures such a pair of
//! actions; everything else (group operations, the Lie bracket, dual-space
//! operators, Euler-Poincare flows) is derived from it generically.
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature and enable `libm` to build for targets without a platform
//! math library.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("either the `std` or the `libm` feature must be enabled");

pub mod algebra;
pub mod csdp;
pub mod dynamics;
pub mod instances;
pub mod jets;
pub mod sampling;

mod error;
mod scalar;

pub use error::{Error, Result};
