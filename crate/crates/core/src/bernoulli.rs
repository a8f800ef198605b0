//! Bernoulli numbers by several independent routes.
//!
//! | method            | formula                                                                  |
//! |-------------------|--------------------------------------------------------------------------|
//! | `oracle`          | coefficients of `x/(e^x - 1)` by exact series division                   |
//! | `theorem`         | `Σ_{i=0}^{n} (-1)^i C(n+1,i+1)/C(n+i,i) S(n+i,i)`                        |
//! | `bell`            | `Σ_{k=1}^{n} (-1)^k k! B_{n,k}(1/2, 1/3, ..., 1/(n-k+2))`                |
//! | `logan`           | `Σ_{k=1}^{n} (-1)^k k!/(k+1) S(n,k)`                                     |
//! | `guo-qi`          | recursion over power-sum coefficients `A_m` (even indices only)          |
//! | `double-stirling` | products of Stirling numbers over binomials (even indices only)          |
//! | `alternating`     | alternating double sum of powers (even indices only)                     |
//!
//! The `alternating` formula is evaluated exactly as it is commonly quoted.
//! That transcription disagrees with the true values (it gives `1/3` for
//! `B_2`), and the verifier reports this instead of hiding it.
//! `B_1 = -1/2` throughout.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, factorial, sign, Integer, Rational};
use crate::bell::bell_reciprocal_args;
use crate::error::{Error, Result};
use crate::series::bernoulli_series;
use crate::stirling::StirlingTable;

/// Identifies one Bernoulli formula. Variants are declared in the
/// alphabetical order of their names, so the derived ordering sorts by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MethodId {
    #[serde(rename = "alternating")]
    AlternatingDoubleSum,
    #[serde(rename = "bell")]
    BellSum,
    #[serde(rename = "double-stirling")]
    DoubleStirling,
    #[serde(rename = "guo-qi")]
    GuoQiRecursion,
    #[serde(rename = "logan")]
    Logan,
    #[serde(rename = "oracle")]
    SeriesOracle,
    #[serde(rename = "theorem")]
    TheoremMain,
}

impl MethodId {
    pub const ALL: [MethodId; 7] = [
        MethodId::AlternatingDoubleSum,
        MethodId::BellSum,
        MethodId::DoubleStirling,
        MethodId::GuoQiRecursion,
        MethodId::Logan,
        MethodId::SeriesOracle,
        MethodId::TheoremMain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodId::AlternatingDoubleSum => "alternating",
            MethodId::BellSum => "bell",
            MethodId::DoubleStirling => "double-stirling",
            MethodId::GuoQiRecursion => "guo-qi",
            MethodId::Logan => "logan",
            MethodId::SeriesOracle => "oracle",
            MethodId::TheoremMain => "theorem",
        }
    }

    pub fn even_only(self) -> bool {
        matches!(
            self,
            MethodId::GuoQiRecursion | MethodId::DoubleStirling | MethodId::AlternatingDoubleSum
        )
    }

    pub fn supports(self, n: usize) -> bool {
        match self {
            MethodId::SeriesOracle | MethodId::TheoremMain => true,
            MethodId::BellSum | MethodId::Logan => n >= 1,
            _ => n >= 2 && n % 2 == 0,
        }
    }

    /// Human-readable description of the accepted indices.
    pub fn supported_indices(self) -> &'static str {
        match self {
            MethodId::SeriesOracle | MethodId::TheoremMain => "every n >= 0",
            MethodId::BellSum | MethodId::Logan => "every n >= 1",
            _ => "only even n >= 2",
        }
    }

    /// Every method that can evaluate `B_n`, in name order.
    pub fn supporting(n: usize) -> impl Iterator<Item = MethodId> {
        Self::ALL.into_iter().filter(move |m| m.supports(n))
    }

    /// Stirling table rows needed to evaluate `B_n`.
    pub fn table_rows_needed(self, n: usize) -> usize {
        match self {
            MethodId::TheoremMain | MethodId::BellSum => 2 * n,
            MethodId::Logan => n,
            MethodId::DoubleStirling => n + 1,
            _ => 0,
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

/// `B_n = Σ_{i=0}^{n} (-1)^i C(n+1, i+1) / C(n+i, i) · S(n+i, i)`.
pub fn bernoulli_theorem(n: usize, table: &StirlingTable) -> Result<Rational> {
    table.ensure_covers(2 * n)?;
    let mut total = Rational::zero();
    for i in 0..=n {
        let s = table.get(n + i, i)?;
        if s.is_zero() {
            continue;
        }
        let num = sign(i) * binomial(n + 1, i as i64 + 1) * s;
        total += Rational::new(num, binomial(n + i, i as i64))?;
    }
    Ok(total)
}

/// `B_n = Σ_{k=1}^{n} (-1)^k k! B_{n,k}(1/2, 1/3, ..., 1/(n-k+2))`, with each
/// Bell value taken from its Stirling closed form.
pub fn bernoulli_bell(n: usize, table: &StirlingTable) -> Result<Rational> {
    table.ensure_covers(2 * n)?;
    let mut total = Rational::zero();
    for k in 1..=n {
        let b = bell_reciprocal_args(n, k, table)?;
        total += Rational::from(sign(k) * factorial(k)) * b;
    }
    Ok(total)
}

/// `B_n = Σ_{k=1}^{n} (-1)^k k!/(k+1) · S(n,k)`.
pub fn bernoulli_logan(n: usize, table: &StirlingTable) -> Result<Rational> {
    table.ensure_covers(n)?;
    let mut total = Rational::zero();
    for k in 1..=n {
        let num = sign(k) * factorial(k) * table.get(n, k)?;
        total += Rational::new(num, k + 1)?;
    }
    Ok(total)
}

/// Coefficients of the polynomial `Σ_{m=1}^{n} m^p = Σ_{j=0}^{p+1} A_j n^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumCoeffs {
    pub exponent: usize,
    pub coeffs: Vec<Rational>,
}

impl PowerSumCoeffs {
    /// `A_j`, zero beyond the degree.
    pub fn get(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn eval(&self, n: usize) -> Rational {
        let x = Rational::from(n);
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &x + c)
    }
}

/// Solves the Vandermonde system obtained by sampling `Σ_{m=1}^{n} m^p` at
/// `n = 0, 1, ..., p+1`. Bernoulli numbers are not used.
///
/// The system is solved in Newton form: the forward differences `Δ^j f(0)`
/// of the samples are the coefficients on the basis `C(n, j)`, which is then
/// expanded into monomials. Everything stays in integers until the final
/// division by `j!`.
pub fn power_sum_coeffs(p: usize) -> PowerSumCoeffs {
    let size = p + 2;
    let mut samples: Vec<Integer> = Vec::with_capacity(size);
    let mut running = Integer::zero();
    for node in 0..size {
        if node > 0 {
            running += num_traits::pow(Integer::from(node), p);
        }
        samples.push(running.clone());
    }

    // samples[j] becomes Δ^j f(0)
    for j in 1..size {
        for i in (j..size).rev() {
            let prev = samples[i - 1].clone();
            samples[i] -= prev;
        }
    }

    // falling[m] holds the n^m coefficient of n(n-1)...(n-j+1)
    let mut falling: Vec<Integer> = vec![Integer::from(1)];
    let mut coeffs = vec![Rational::zero(); size];
    for (j, diff) in samples.iter().enumerate() {
        if j > 0 {
            let shift = Integer::from(j - 1);
            let mut next = vec![Integer::zero(); falling.len() + 1];
            for (m, c) in falling.iter().enumerate() {
                next[m + 1] += c;
                next[m] -= c * &shift;
            }
            falling = next;
        }
        if diff.is_zero() {
            continue;
        }
        let scale = Rational::new(diff.clone(), factorial(j)).expect("nonzero factorial");
        for (m, c) in falling.iter().enumerate() {
            if !c.is_zero() {
                coeffs[m] += &scale * Rational::from(c);
            }
        }
    }
    PowerSumCoeffs {
        exponent: p,
        coeffs,
    }
}

/// `B_{2k} = 1/2 - 1/(2k+1) - 2k Σ_{i=1}^{k-1} A_{2(k-i)} / (2(k-i)+1)`, where
/// the `A_m` are the power-sum coefficients for exponent `2k - 1`.
pub fn bernoulli_guo_qi(k: usize) -> Result<Rational> {
    if k == 0 {
        return Err(unsupported(MethodId::GuoQiRecursion, 0));
    }
    let a = power_sum_coeffs(2 * k - 1);
    let mut sum = Rational::zero();
    for i in 1..k {
        let m = 2 * (k - i);
        sum += a.get(m) * Rational::new(1, m + 1)?;
    }
    Ok(Rational::new(1, 2)? - Rational::new(1, 2 * k + 1)? - Rational::from(2 * k) * sum)
}

/// `B_{2k} = 1 + Σ_{m=1}^{2k-1} S(2k+1,m+1) S(2k,2k-m) / C(2k,m)
///   - 2k/(2k+1) Σ_{m=1}^{2k} S(2k,m) S(2k+1,2k-m+1) / C(2k,m-1)`.
pub fn bernoulli_double_stirling(k: usize, table: &StirlingTable) -> Result<Rational> {
    if k == 0 {
        return Err(unsupported(MethodId::DoubleStirling, 0));
    }
    let n = 2 * k;
    table.ensure_covers(n + 1)?;
    let mut first = Rational::zero();
    for m in 1..n {
        let num = table.get(n + 1, m + 1)? * table.get(n, n - m)?;
        first += Rational::new(num, binomial(n, m as i64))?;
    }
    let mut second = Rational::zero();
    for m in 1..=n {
        let num = table.get(n, m)? * table.get(n + 1, n - m + 1)?;
        second += Rational::new(num, binomial(n, m as i64 - 1))?;
    }
    Ok(Rational::one() + first - Rational::new(n, n + 1)? * second)
}

/// `Σ_{i=0}^{k-1} Σ_{l=0}^{k-i-1} (-1)^{i+l} C(2k,l) (k-i-l)^{2k-1}`.
pub fn alternating_inner_sum(k: usize) -> Integer {
    let mut total = Integer::zero();
    for i in 0..k {
        for l in 0..(k - i) {
            let power = num_traits::pow(Integer::from(k - i - l), 2 * k - 1);
            total += sign(i + l) * binomial(2 * k, l as i64) * power;
        }
    }
    total
}

/// `(-1)^{k-1} k / (2^{2(k-1)} (2^{2k} - 1))` times [`alternating_inner_sum`],
/// as transcribed. Known to disagree with `B_{2k}`; see the module docs.
pub fn bernoulli_alternating(k: usize) -> Result<Rational> {
    if k == 0 {
        return Err(unsupported(MethodId::AlternatingDoubleSum, 0));
    }
    let two = Integer::from(2);
    let den = num_traits::pow(two.clone(), 2 * (k - 1)) * (num_traits::pow(two, 2 * k) - 1);
    let num = sign(k - 1) * Integer::from(k) * alternating_inner_sum(k);
    Rational::new(num, den)
}

fn unsupported(method: MethodId, n: usize) -> Error {
    Error::UnsupportedIndex {
        method,
        n,
        supported: method.supported_indices(),
    }
}

/// Evaluates Bernoulli numbers by any method against one shared Stirling table.
#[derive(Debug, Clone)]
pub struct BernoulliEngine {
    table: StirlingTable,
}

impl BernoulliEngine {
    /// Engine able to evaluate every method for `n <= max_n`.
    pub fn new(max_n: usize) -> Self {
        BernoulliEngine {
            table: StirlingTable::new(2 * max_n + 1),
        }
    }

    pub fn with_table(table: StirlingTable) -> Self {
        BernoulliEngine { table }
    }

    pub fn table(&self) -> &StirlingTable {
        &self.table
    }

    pub fn compute(&self, n: usize, method: MethodId) -> Result<Rational> {
        if !method.supports(n) {
            return Err(unsupported(method, n));
        }
        match method {
            MethodId::SeriesOracle => Ok(bernoulli_series(n).swap_remove(n)),
            MethodId::TheoremMain => bernoulli_theorem(n, &self.table),
            MethodId::BellSum => bernoulli_bell(n, &self.table),
            MethodId::Logan => bernoulli_logan(n, &self.table),
            MethodId::GuoQiRecursion => bernoulli_guo_qi(n / 2),
            MethodId::DoubleStirling => bernoulli_double_stirling(n / 2, &self.table),
            MethodId::AlternatingDoubleSum => bernoulli_alternating(n / 2),
        }
    }
}

/// `B_n` by `method`, building whatever table the method needs.
pub fn bernoulli(n: usize, method: MethodId) -> Result<Rational> {
    if !method.supports(n) {
        return Err(unsupported(method, n));
    }
    let table = StirlingTable::new(method.table_rows_needed(n));
    BernoulliEngine::with_table(table).compute(n, method)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn theorem_examples() {
        let t = StirlingTable::new(10);
        assert_eq!(bernoulli_theorem(0, &t).unwrap(), r("1"));
        assert_eq!(bernoulli_theorem(1, &t).unwrap(), r("-1/2"));
        assert_eq!(bernoulli_theorem(2, &t).unwrap(), r("1/6"));
        assert_eq!(bernoulli_theorem(3, &t).unwrap(), r("0"));
        assert!(matches!(
            bernoulli_theorem(6, &t),
            Err(Error::TableTooSmall { .. })
        ));
    }

    #[test]
    fn bell_examples() {
        let t = StirlingTable::new(10);
        assert_eq!(bernoulli_bell(1, &t).unwrap(), r("-1/2"));
        assert_eq!(bernoulli_bell(2, &t).unwrap(), r("1/6"));
        assert_eq!(bernoulli_bell(5, &t).unwrap(), r("0"));
    }

    #[test]
    fn logan_examples() {
        let t = StirlingTable::new(4);
        assert_eq!(bernoulli_logan(1, &t).unwrap(), r("-1/2"));
        assert_eq!(bernoulli_logan(2, &t).unwrap(), r("1/6"));
        assert_eq!(bernoulli_logan(4, &t).unwrap(), r("-1/30"));
        assert!(bernoulli_logan(5, &t).is_err());
    }

    #[test]
    fn power_sum_examples() {
        let coeffs = |p| power_sum_coeffs(p).coeffs;
        assert_eq!(coeffs(0), vec![r("0"), r("1")]);
        assert_eq!(coeffs(2), vec![r("0"), r("1/6"), r("1/2"), r("1/3")]);
        assert_eq!(
            coeffs(3),
            vec![r("0"), r("0"), r("1/4"), r("1/2"), r("1/4")]
        );
        let five = power_sum_coeffs(5);
        assert_eq!(five.get(4), r("5/12"));
        assert_eq!(five.get(2), r("-1/12"));
        assert_eq!(five.get(9), r("0"));
    }

    #[test]
    fn power_sum_identity_by_direct_summation() {
        for p in 0..=12 {
            let a = power_sum_coeffs(p);
            assert_eq!(a.coeffs.len(), p + 2);
            assert!(a.coeffs[0].is_zero());
            for n in 1..=p + 3 {
                let direct: Integer = (1..=n).map(|m| num_traits::pow(Integer::from(m), p)).sum();
                assert_eq!(a.eval(n), Rational::from(direct), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn guo_qi_examples() {
        assert_eq!(bernoulli_guo_qi(1).unwrap(), r("1/6"));
        assert_eq!(bernoulli_guo_qi(2).unwrap(), r("-1/30"));
        assert_eq!(bernoulli_guo_qi(3).unwrap(), r("1/42"));
    }

    #[test]
    fn double_stirling_examples() {
        let t = StirlingTable::new(11);
        assert_eq!(bernoulli_double_stirling(1, &t).unwrap(), r("1/6"));
        assert_eq!(bernoulli_double_stirling(2, &t).unwrap(), r("-1/30"));
        assert_eq!(bernoulli_double_stirling(5, &t).unwrap(), r("5/66"));
    }

    #[test]
    fn alternating_as_transcribed() {
        assert_eq!(alternating_inner_sum(1), Integer::from(1));
        assert_eq!(alternating_inner_sum(2), Integer::from(3));
        assert_eq!(bernoulli_alternating(1).unwrap(), r("1/3"));
        assert_ne!(bernoulli_alternating(1).unwrap(), r("1/6"));
    }

    #[test]
    fn dispatcher() {
        assert_eq!(
            bernoulli(12, MethodId::TheoremMain).unwrap(),
            r("-691/2730")
        );
        assert_eq!(bernoulli(0, MethodId::SeriesOracle).unwrap(), r("1"));
        assert_eq!(bernoulli(7, MethodId::Logan).unwrap(), r("0"));
        assert_eq!(bernoulli(10, MethodId::DoubleStirling).unwrap(), r("5/66"));
        let err = bernoulli(3, MethodId::GuoQiRecursion).unwrap_err();
        assert_eq!(
            err,
            Error::UnsupportedIndex {
                method: MethodId::GuoQiRecursion,
                n: 3,
                supported: "only even n >= 2"
            }
        );
        assert!(err.to_string().contains("even"));
        assert!(bernoulli(0, MethodId::BellSum).is_err());
        assert!(bernoulli(0, MethodId::DoubleStirling).is_err());
    }

    #[test]
    fn method_names_round_trip() {
        for m in MethodId::ALL {
            assert_eq!(m.name().parse::<MethodId>().unwrap(), m);
            assert_eq!(
                serde_json::to_string(&m).unwrap(),
                format!("\"{}\"", m.name())
            );
        }
        let mut names: Vec<_> = MethodId::ALL.iter().map(|m| m.name()).collect();
        let sorted = {
            let mut s = names.clone();
            s.sort();
            s
        };
        assert_eq!(names, sorted);
        names.dedup();
        assert_eq!(names.len(), 7);
        assert!("fourier".parse::<MethodId>().is_err());
    }

    #[test]
    fn supporting_counts() {
        assert_eq!(MethodId::supporting(0).count(), 2);
        assert_eq!(MethodId::supporting(1).count(), 4);
        assert_eq!(MethodId::supporting(2).count(), 7);
        assert_eq!(MethodId::supporting(3).count(), 4);
    }
}
