//! Shared inputs for the criterion benchmarks.

use bernstir::{BellArgs, MethodId, Rational};

/// Indices at which the Bernoulli formulas are compared.
pub const BERNOULLI_SIZES: [usize; 3] = [10, 20, 40];

/// Methods worth timing at `n`: everything that supports it except the
/// transcription known to be wrong.
pub fn timed_methods(n: usize) -> Vec<MethodId> {
    MethodId::supporting(n)
        .filter(|m| *m != MethodId::AlternatingDoubleSum)
        .collect()
}

/// Fixed non-trivial arguments `x_i = (-1)^i (i+1)/(2i+1)`.
pub fn sample_args(len: usize) -> BellArgs {
    BellArgs::from_fn(len, |i| {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        Rational::new(sign * (i as i64 + 1), 2 * i as i64 + 1).expect("odd denominator")
    })
}
