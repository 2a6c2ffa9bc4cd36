use crate::error::{Error, Result};

/// Numerical thresholds used by the verification suites and by matrix
/// inversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Bound for identities that hold up to round-off only.
    pub exact_tol: f64,
    /// Bound for identities checked against finite differences.
    pub fd_tol: f64,
    /// Base scale of the pivot guard in matrix inversion; the effective
    /// threshold is `sing_tol * max_abs^n`.
    pub sing_tol: f64,
}

impl Tolerances {
    /// Validated constructor: requires `0 < exact_tol < fd_tol` and
    /// `sing_tol > 0`.
    // NaN arguments must also be rejected, so the comparisons stay negated.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn new(exact_tol: f64, fd_tol: f64, sing_tol: f64) -> Result<Self> {
        if !(exact_tol > 0.0 && exact_tol < fd_tol) {
            return Err(Error::InvalidArgument(
                "tolerances must satisfy 0 < exact_tol < fd_tol",
            ));
        }
        if !(sing_tol > 0.0) {
            return Err(Error::InvalidArgument("sing_tol must be positive"));
        }
        Ok(Tolerances {
            exact_tol,
            fd_tol,
            sing_tol,
        })
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            exact_tol: 1e-10,
            fd_tol: 1e-5,
            sing_tol: 1e-12,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inverted_ordering() {
        assert!(Tolerances::new(1e-3, 1e-5, 1e-12).is_err());
        assert!(Tolerances::new(1e-10, 1e-5, 0.0).is_err());
        assert!(Tolerances::new(1e-10, 1e-5, 1e-12).is_ok());
    }
}
