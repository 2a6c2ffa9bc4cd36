//! `GL(n)` acting on square matrices by multiplication from both sides.

use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::{matrix_units, trace_pairing, LinearSpace, Matrix};
use crate::csdp::ActionPair;
use crate::error::{Error, Result};
use crate::sampling;

/// The action pair `V = Mat(n)`, `g·v = gv`, `v·g = vg`.
///
/// Both actions are plain matrix products, so commutation is associativity
/// of matrix multiplication. Dual space is again `Mat(n)` under the trace
/// pairing.
#[derive(Debug, Clone, PartialEq)]
pub struct GlMat {
    n: usize,
}

impl GlMat {
    /// Instance over `n x n` matrices; `n` must be at least 1.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("matrix side must be at least 1"));
        }
        Ok(GlMat { n })
    }

    fn check(&self, m: usize) -> Result<()> {
        if m != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: m,
            });
        }
        Ok(())
    }
}

impl ActionPair for GlMat {
    type V = Matrix;
    type Dual = Matrix;

    fn n(&self) -> usize {
        self.n
    }

    fn left_act(&self, g: &Matrix, v: &Matrix) -> Result<Matrix> {
        self.check(g.n())?;
        g.multiply(v)
    }

    fn right_act(&self, v: &Matrix, g: &Matrix) -> Result<Matrix> {
        self.check(g.n())?;
        v.multiply(g)
    }

    fn inf_left(&self, xi: &Matrix, v: &Matrix) -> Result<Matrix> {
        self.check(xi.n())?;
        xi.multiply(v)
    }

    fn inf_right(&self, v: &Matrix, xi: &Matrix) -> Result<Matrix> {
        self.check(xi.n())?;
        v.multiply(xi)
    }

    fn pair(&self, alpha: &Matrix, v: &Matrix) -> Result<f64> {
        self.check(alpha.n())?;
        trace_pairing(alpha, v)
    }

    fn basis(&self) -> Vec<Matrix> {
        matrix_units(self.n)
    }

    fn dual_basis(&self) -> Vec<Matrix> {
        matrix_units(self.n)
    }

    fn zero_v(&self) -> Matrix {
        Matrix::zeros(self.n)
    }

    fn zero_dual(&self) -> Matrix {
        Matrix::zeros(self.n)
    }

    fn random_v<R: Rng + ?Sized>(&self, rng: &mut R) -> Matrix {
        sampling::random_matrix(self.n, rng)
    }

    fn random_dual<R: Rng + ?Sized>(&self, rng: &mut R) -> Matrix {
        sampling::random_matrix(self.n, rng)
    }
}

/// Closed form of the heart operator: `a ♥ w = a^T w - w a^T`.
pub fn heart_direct(a: &Matrix, w: &Matrix) -> Result<Matrix> {
    let at = a.transpose();
    Ok(at.multiply(w)?.sub(&w.multiply(&at)?))
}

/// Closed form of the diamond operator: `v ◇ w = v^T w - w v^T`.
pub fn diamond_direct(v: &Matrix, w: &Matrix) -> Result<Matrix> {
    let vt = v.transpose();
    Ok(vt.multiply(w)?.sub(&w.multiply(&vt)?))
}

/// Closed form of the `gl(n)` coadjoint under the trace pairing:
/// `ad*_a alpha = a^T alpha - alpha a^T`.
pub fn coadjoint_direct(a: &Matrix, alpha: &Matrix) -> Result<Matrix> {
    let at = a.transpose();
    Ok(at.multiply(alpha)?.sub(&alpha.multiply(&at)?))
}
