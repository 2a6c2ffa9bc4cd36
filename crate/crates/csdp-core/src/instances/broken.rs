//! A pair of individually valid actions that fail to commute, kept as a
//! negative control: the product construction demands commuting actions,
//! and the verification suite must catch this one.

use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::{tensor12_units, tensor21_units, tensor_pairing, Matrix, Tensor12, Tensor21};
use crate::csdp::ActionPair;
use crate::error::{Error, Result};
use crate::instances::glt12;
use crate::sampling;

/// Left action as in [`crate::instances::GlT12`], but a right action that
/// also touches the upper index: `(T * g)^i_jk = g^l_i T^l_jk`.
///
/// Each action satisfies its own identity and composition laws, yet
/// `(g·T)*h != g·(T*h)` in general, so composition built on this pair is
/// not associative. [`crate::csdp::verify_action_pair`] reports the
/// commutation failure.
#[derive(Debug, Clone, PartialEq)]
pub struct NoncommutingT12 {
    n: usize,
}

impl NoncommutingT12 {
    /// Instance over `(1,2)`-tensors of side `n >= 1`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("matrix side must be at least 1"));
        }
        Ok(NoncommutingT12 { n })
    }

    fn check(&self, found: usize) -> Result<()> {
        if found != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found,
            });
        }
        Ok(())
    }
}

impl ActionPair for NoncommutingT12 {
    type V = Tensor12;
    type Dual = Tensor21;

    fn n(&self) -> usize {
        self.n
    }

    fn left_act(&self, g: &Matrix, v: &Tensor12) -> Result<Tensor12> {
        self.check(g.n())?;
        glt12::left_action(g, v)
    }

    fn right_act(&self, v: &Tensor12, g: &Matrix) -> Result<Tensor12> {
        self.check(g.n())?;
        let n = self.n;
        let mut out = Tensor12::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = 0.0;
                    for l in 0..n {
                        acc += g[(l, i)] * v.get(l, j, k);
                    }
                    out.set(i, j, k, acc);
                }
            }
        }
        Ok(out)
    }

    fn inf_left(&self, xi: &Matrix, v: &Tensor12) -> Result<Tensor12> {
        self.check(xi.n())?;
        glt12::inf_left_action(xi, v)
    }

    fn inf_right(&self, v: &Tensor12, xi: &Matrix) -> Result<Tensor12> {
        self.check(xi.n())?;
        let n = self.n;
        let mut out = Tensor12::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = 0.0;
                    for l in 0..n {
                        acc += xi[(l, i)] * v.get(l, j, k);
                    }
                    out.set(i, j, k, acc);
                }
            }
        }
        Ok(out)
    }

    fn pair(&self, alpha: &Tensor21, v: &Tensor12) -> Result<f64> {
        self.check(alpha.n())?;
        tensor_pairing(alpha, v)
    }

    fn basis(&self) -> Vec<Tensor12> {
        tensor12_units(self.n)
    }

    fn dual_basis(&self) -> Vec<Tensor21> {
        tensor21_units(self.n)
    }

    fn zero_v(&self) -> Tensor12 {
        Tensor12::zeros(self.n)
    }

    fn zero_dual(&self) -> Tensor21 {
        Tensor21::zeros(self.n)
    }

    fn random_v<R: Rng + ?Sized>(&self, rng: &mut R) -> Tensor12 {
        sampling::random_tensor12(self.n, rng)
    }

    fn random_dual<R: Rng + ?Sized>(&self, rng: &mut R) -> Tensor21 {
        sampling::random_tensor21(self.n, rng)
    }
}
