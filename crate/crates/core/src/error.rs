use thiserror::Error;

/// Errors raised by the algebraic machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in scalar field")]
    DivisionByZero,
    #[error("pole at assignment")]
    PoleAtAssignment,
    #[error("parameter '{0}' is not assigned")]
    UnassignedParameter(&'static str),
    #[error("operands belong to different algebras ('{left}' and '{right}')")]
    MixedInstances {
        left: &'static str,
        right: &'static str,
    },
    #[error("index {index} out of range for a {n}-dimensional calculus")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("free structure derivation requires triangular sigma")]
    NotTriangular,
    #[error("diagonal entry sigma[{0}][{0}] has no known inverse")]
    NonInvertibleDiagonal(usize),
    #[error("no free structure (sigma_bar, sigma_hat) is available")]
    NoFreeStructure,
    #[error("sigma is not diagonal at index {0}")]
    NotDiagonal(usize),
    #[error("partial {0} is not a skew q-derivation for its sigma")]
    NotSkewQ(usize),
    #[error("two-forms only for quantum plane")]
    TwoFormsUnsupported,
    #[error("the calculus is not inner")]
    NotInner,
    #[error("dot product of a degree-{n} functional with a degree-{m} form is not supported")]
    UnsupportedDegree { n: usize, m: usize },
    #[error("length mismatch: expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("invalid parameter value: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
