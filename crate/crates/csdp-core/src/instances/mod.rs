//! Concrete action pairs over `GL(n)`: matrices acted on by two-sided
//! multiplication, `(1,2)`-tensors acted on contravariantly/covariantly,
//! and a deliberately non-commuting pair used as a negative control.

mod broken;
pub mod glmat;
pub mod glt12;

pub use broken::NoncommutingT12;
pub use glmat::GlMat;
pub use glt12::GlT12;
