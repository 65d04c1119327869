use thiserror::Error;

/// Errors raised by the semigroup, derivation and Hilbert-Kunz routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(i64),
    #[error("input value {value} exceeds the supported maximum {max}")]
    InputTooLarge { value: i64, max: i64 },
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(i64),
    #[error("the type of the semigroup N is undefined")]
    TypeUndefinedForN,
    #[error("set element {0} is not in the semigroup")]
    ElementNotInSemigroup(i64),
    #[error("sequence is not a minimal arithmetic sequence: {0}")]
    NotMinimalArithmetic(String),
    #[error("sequence is not strictly increasing")]
    NotStrictlyIncreasing,
    #[error("sequence needs at least {min} entries, got {len}")]
    TooShort { min: usize, len: usize },
    #[error("point ({x}, {y}) has a negative coordinate")]
    NegativeCoordinate { x: i64, y: i64 },
    #[error("semigroup ring is not known to be Cohen-Macaulay (pass assume_cm to override)")]
    CmNotAssumed,
    #[error("exponent search exceeded the cap {0}")]
    SearchCapExceeded(i64),
    #[error("invalid pair ({n0}, {n1}): need 0 < n0 < n1 and gcd 1")]
    InvalidPair { n0: i64, n1: i64 },
    #[error("p = 1 is handled by the two-generator closed form")]
    PTooSmall,
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("enumeration box of {cells} cells exceeds the limit {limit}")]
    BoxOverflow { cells: u128, limit: u128 },
    #[error("Frobenius power exponent must be positive")]
    ZeroFrobeniusPower,
    #[error("integer overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
