//! Exact Bernoulli numbers, Stirling numbers of the second kind and partial
//! Bell polynomials.
//!
//! Every value is an exact [`Rational`]. Bernoulli numbers can be computed
//! by several independent formulas ([`MethodId`]), and [`verify`] checks all
//! of them against a truncated power-series oracle.
//!
//! ```
//! use bernstir::{bernoulli, MethodId, Rational};
//!
//! let b12 = bernoulli(12, MethodId::TheoremMain).unwrap();
//! assert_eq!(b12, "-691/2730".parse::<Rational>().unwrap());
//! ```

pub mod arith;
pub mod bell;
pub mod bernoulli;
pub mod error;
pub mod series;
pub mod stirling;
pub mod verify;

pub use arith::{binomial, factorial, Integer, Rational};
pub use bell::{BellArgs, BellValue};
pub use bernoulli::{bernoulli, BernoulliEngine, MethodId, PowerSumCoeffs};
pub use error::{Error, Result};
pub use series::TruncatedSeries;
pub use stirling::{stirling_explicit, StirlingTable};
pub use verify::{cross_verify, identity_suite, IdentityReport, VerificationReport};
