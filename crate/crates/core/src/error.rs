use thiserror::Error;

use crate::bernoulli::MethodId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse {input:?} as a rational: {reason}")]
    Parse { input: String, reason: String },

    #[error("stirling table covers n <= {have}, but n = {needed} is required")]
    TableTooSmall { needed: usize, have: usize },

    #[error("B({n},{k}) needs {needed} arguments, got {got}")]
    InsufficientArgs {
        n: usize,
        k: usize,
        needed: usize,
        got: usize,
    },

    #[error("invalid Bell polynomial index ({n},{k}); need n >= k >= 1")]
    BellIndex { n: usize, k: usize },

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has zero constant term and is not invertible")]
    NotInvertible,

    #[error("method `{method}` does not support n = {n}; it accepts {supported}")]
    UnsupportedIndex {
        method: MethodId,
        n: usize,
        supported: &'static str,
    },

    #[error("unknown method `{0}`")]
    UnknownMethod(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
