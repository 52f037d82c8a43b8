//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: u32, degree: usize },
    #[error("point {0} appears in more than one cycle")]
    RepeatedPoint(u32),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("subgroup generators do not lie in the ambient group")]
    NotASubgroup,
    #[error("{what} needs {need} but the cap is {cap}")]
    CapExceeded {
        what: &'static str,
        need: u128,
        cap: u128,
    },
    #[error("scale cap exceeded: {0}")]
    ScaleCap(String),
    #[error("subgroup is not normal in its overgroup")]
    NotNormal,
    #[error("fixed-point formula produced a non-integral value: {0}")]
    NonIntegralFix(String),
    #[error("conjugacy search budget exhausted; result undecided")]
    ConjugacyUndecided,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("THEOREM VIOLATION: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
