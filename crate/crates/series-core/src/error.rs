use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("constant term is not invertible")]
    NotInvertible,
    #[error("constant term must be {expected} for {op}")]
    ConstantTerm { op: &'static str, expected: &'static str },
    #[error("reversion needs f(0) = 0 and an invertible linear coefficient")]
    NotReversible,
    #[error("offset {0} is not a nonnegative integer")]
    NonIntegralOffset(String),
    #[error("offsets {0} and {1} differ by a non-integer")]
    OffsetMismatch(String, String),
    #[error("series has no known coefficients after this operation")]
    Exhausted,
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system is underdetermined")]
    Underdetermined,
}
