use thiserror::Error;

/// Largest value any generator or computed element may take (63-bit range).
pub const MAX_VALUE: u64 = i64::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no generators given")]
    EmptyInput,
    #[error("generator 0 is not allowed")]
    ZeroGenerator,
    #[error("generators have gcd {0}, so the complement in N is infinite")]
    GcdNotOne(u64),
    #[error("arithmetic overflow: value exceeds the 63-bit range")]
    Overflow,
    #[error("the semigroup is N itself; its Frobenius number is -1 by convention")]
    SemigroupIsN,
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(i64),
    #[error("column {index} out of range 1..{columns}")]
    ColumnOutOfRange { index: usize, columns: usize },
    #[error("{family} parameter must be at least {min}, got {got}")]
    ParamTooSmall {
        family: &'static str,
        min: u64,
        got: u64,
    },
    #[error("semigroup {0} is not a member of a known closed-form family")]
    NotFamilyMember(String),
    #[error("input too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).filter(|&v| v <= MAX_VALUE).ok_or(Error::Overflow)
}

pub(crate) fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).filter(|&v| v <= MAX_VALUE).ok_or(Error::Overflow)
}
