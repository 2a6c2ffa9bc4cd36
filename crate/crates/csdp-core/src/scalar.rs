//! Scalar math shims that work both with and without `std`.

#[cfg(feature = "std")]
pub fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

#[cfg(not(feature = "std"))]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[cfg(feature = "std")]
pub fn sin(x: f64) -> f64 {
    x.sin()
}

#[cfg(not(feature = "std"))]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[cfg(feature = "std")]
pub fn cos(x: f64) -> f64 {
    x.cos()
}

#[cfg(not(feature = "std"))]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

/// Absolute value via sign-bit masking, available everywhere.
pub fn abs(x: f64) -> f64 {
    f64::from_bits(x.to_bits() & !(1u64 << 63))
}

/// Maximum of two scalars, ignoring NaN payloads (NaN loses).
pub fn max(a: f64, b: f64) -> f64 {
    if a > b {
        a
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abs_matches_std() {
        for x in [0.0, -0.0, 1.5, -1.5, f64::INFINITY, f64::NEG_INFINITY] {
            assert_eq!(abs(x), x.abs());
        }
    }

    #[test]
    fn sqrt_matches_std() {
        for x in [0.0, 1.0, 2.0, 144.0] {
            assert_eq!(sqrt(x), x.sqrt());
        }
    }
}
