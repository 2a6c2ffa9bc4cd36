use super::space::LinearSpace;
use crate::error::Result;

/// Default step for central differences; balances truncation against
/// round-off for quantities of order one.
pub const FD_STEP: f64 = 1e-5;

/// Central difference `(f(at + h) - f(at - h)) / (2h)` of a curve in a
/// linear space.
pub fn central_difference<T, F>(mut f: F, at: f64, h: f64) -> T
where
    T: LinearSpace,
    F: FnMut(f64) -> T,
{
    f(at + h).axpy(-1.0, &f(at - h)).scale(0.5 / h)
}

/// Fallible variant of [`central_difference`] for curves whose evaluation can
/// fail (e.g. ones involving a matrix inverse).
pub fn try_central_difference<T, F>(mut f: F, at: f64, h: f64) -> Result<T>
where
    T: LinearSpace,
    F: FnMut(f64) -> Result<T>,
{
    Ok(f(at + h)?.axpy(-1.0, &f(at - h)?).scale(0.5 / h))
}
