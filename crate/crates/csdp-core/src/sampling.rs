//! Deterministic random sampling of matrices, tensors, and group elements.
//!
//! All entries are drawn i.i.d. uniform on `[-1, 1]`; group elements are
//! matrix exponentials of such samples, which keeps them safely inside the
//! invertible locus. Use [`rng_from_seed`] to get reproducible streams.

use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Matrix, Tensor12, Tensor21};

/// Deterministic RNG from a 64-bit seed; the same seed always yields the
/// same sample stream on every platform.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn uniform_entries<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<f64> {
    (0..len).map(|_| rng.gen_range(-1.0..=1.0)).collect()
}

/// Matrix with i.i.d. uniform `[-1, 1]` entries.
pub fn random_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    Matrix::from_flat(n, &uniform_entries(n * n, rng)).expect("length matches by construction")
}

/// Invertible matrix: the exponential of a uniform sample.
pub fn random_group_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    random_matrix(n, rng).exp()
}

/// Tensor `T^i_{jk}` with i.i.d. uniform `[-1, 1]` components.
pub fn random_tensor12<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tensor12 {
    Tensor12::from_flat(n, &uniform_entries(n * n * n, rng))
        .expect("length matches by construction")
}

/// Lower-index-symmetric tensor: a uniform sample, symmetrized.
pub fn random_sym12<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tensor12 {
    random_tensor12(n, rng).symmetrized()
}

/// Tensor `a_i^{jk}` with i.i.d. uniform `[-1, 1]` components.
pub fn random_tensor21<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tensor21 {
    Tensor21::from_flat(n, &uniform_entries(n * n * n, rng))
        .expect("length matches by construction")
}

/// Upper-index-symmetric dual tensor: a uniform sample, symmetrized.
pub fn random_sym21<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tensor21 {
    random_tensor21(n, rng).symmetrized()
}
