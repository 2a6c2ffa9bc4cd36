//! Dense linear algebra for desk-scale problems: row-major matrices, the two
//! tensor shapes used by the `GL(n)` instances, canonical bases, and the
//! finite-difference helpers the verification suites rely on.
//!
//! Index conventions, fixed once for the whole crate:
//!
//! * `Matrix`: entry `(i, j)` is row `i`, column `j`; flat offset `i * n + j`.
//! * [`Tensor12`] holds components `T^i_{jk}` (one upper, two lower) at
//!   `[i][j][k]`, flat offset `i * n^2 + j * n + k`.
//! * [`Tensor21`] holds components `a_i^{jk}` (one lower, two upper) at the
//!   same `[i][j][k]` layout.

mod basis;
mod fd;
mod matrix;
mod space;
mod tensor;
mod tolerances;

pub use basis::{
    matrix_units, sym12_basis, sym12_dim, sym21_dual_basis, tensor12_units, tensor21_units,
};
pub use fd::{central_difference, try_central_difference, FD_STEP};
pub use matrix::{trace_pairing, Matrix};
pub use space::LinearSpace;
pub use tensor::{tensor_pairing, Tensor12, Tensor21};
pub use tolerances::Tolerances;
