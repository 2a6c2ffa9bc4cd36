use core::fmt;

/// Errors produced by operations in this crate.
#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// Two operands have incompatible dimensions.
    DimensionMismatch {
        /// Dimension expected by the operation.
        expected: usize,
        /// Dimension actually supplied.
        found: usize,
    },
    /// A matrix inversion hit a pivot below the singularity threshold.
    SingularMatrix,
    /// A quadratic form was given a weight that is not strictly positive.
    NonPositiveWeight {
        /// Index of the offending weight.
        index: usize,
    },
    /// Group reconstruction left the invertible locus at the given step.
    SingularReconstruction {
        /// One-based index of the integration step that failed.
        step: usize,
    },
    /// An argument failed validation.
    InvalidArgument(&'static str),
    /// An input contained a NaN or infinite component.
    NonFinite,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::SingularMatrix => write!(f, "matrix is singular to working precision"),
            Error::NonPositiveWeight { index } => {
                write!(f, "quadratic form weight {index} is not strictly positive")
            }
            Error::SingularReconstruction { step } => {
                write!(f, "group reconstruction became singular at step {step}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NonFinite => write!(f, "input contains a non-finite component"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
