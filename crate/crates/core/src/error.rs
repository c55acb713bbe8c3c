use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    /// An input violates a mathematical precondition.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("empty linear system: h0({0}) = 0")]
    EmptyLinearSystem(String),

    #[error("E_L undefined: {0} is not globally generated")]
    NotGloballyGenerated(String),

    #[error("projective image undefined: h0 = {0} < 2")]
    ProjectiveImageUndefined(usize),

    #[error(
        "search bound too small: no divisor with h0 >= 2 and h1 >= {min_h1} up to degree {bound}"
    )]
    BoundTooSmall { bound: usize, min_h1: usize },

    #[error("slope denominator degenerate: g - c - 2 = {0} < 1")]
    DegenerateDenominator(i64),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no general E found after {attempts} attempts ({special} special, {base_points} with base points)")]
    NoGeneralDivisor {
        attempts: usize,
        special: usize,
        base_points: usize,
    },

    /// A self-check failed; this is a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
