use thiserror::Error;

/// Every failure mode surfaced by the library.
///
/// Several variants (`ProductMismatch`, `InternalInconsistency`) report a
/// violated mathematical identity. They must never fire on correct code and
/// exist so that the sweeps can surface a broken identity as data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a monic polynomial")]
    NonMonic,
    #[error("polynomial discriminant is zero (not squarefree)")]
    ZeroDiscriminant,
    #[error("polynomials live over different prime fields (p = {0} vs p = {1})")]
    ModulusMismatch(u64, u64),
    #[error("prime modulus {0} exceeds the machine-word bound")]
    ModulusTooLarge(String),
    #[error("{what} = {value} is out of range ({bound})")]
    OutOfRange {
        what: &'static str,
        value: String,
        bound: String,
    },
    #[error("could not completely factor {0}: composite cofactor beyond 64 bits")]
    FactorizationTooHard(String),
    #[error("index j = {j} outside 0..={max}")]
    IndexOutOfRange { j: i64, max: u64 },
    #[error("index {0} must be odd")]
    EvenIndex(u64),
    #[error("product of the constructed factors differs from w_{0}")]
    ProductMismatch(u64),
    #[error("discriminant quotient {0} is not an exact square")]
    NotASquareQuotient(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("modulus {0} is divisible by 4; the cyclicity criterion is not asserted there")]
    UnsupportedModulus(u64),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(
    what: &'static str,
    value: impl ToString,
    bound: impl ToString,
) -> Error {
    Error::OutOfRange {
        what,
        value: value.to_string(),
        bound: bound.to_string(),
    }
}
