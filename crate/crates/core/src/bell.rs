//! Partial Bell polynomials `B_{n,k}(x_1, ..., x_{n-k+1})` evaluated at exact
//! rational arguments.
//!
//! Two general evaluators are provided. [`bell_partition_sum`] enumerates
//! block-size profiles directly and serves as the oracle.
//! [`bell_recurrence`] conditions on the block holding the first element and
//! is the production path. The closed forms for the argument vectors
//! `(0,1,...,1)` and `(1/2,1/3,...)` are expressed through Stirling numbers.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, div_exact, factorial, sign, Integer, Rational};
use crate::error::{Error, Result};
use crate::stirling::StirlingTable;

/// Arguments `x_1, x_2, ...`; `xs[i]` holds `x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BellArgs(Vec<Rational>);

impl BellArgs {
    pub fn new(xs: Vec<Rational>) -> Self {
        BellArgs(xs)
    }

    /// `x_i = f(i)` for `i = 1..=len`.
    pub fn from_fn(len: usize, f: impl FnMut(usize) -> Rational) -> Self {
        BellArgs((1..=len).map(f).collect())
    }

    /// `(1/2, 1/3, ..., 1/(len+1))`
    pub fn reciprocals(len: usize) -> Self {
        Self::from_fn(len, |i| Rational::new(1, i as i64 + 1).expect("nonzero"))
    }

    /// `(0, 1, 1, ..., 1)`
    pub fn zero_then_ones(len: usize) -> Self {
        Self::from_fn(len, |i| {
            if i == 1 {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    /// `x_i`, one-based.
    pub fn x(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    /// Checks `n >= k >= 1` and that `x_1..x_{n-k+1}` are present.
    pub fn check(&self, n: usize, k: usize) -> Result<()> {
        check_index(n, k)?;
        let needed = n - k + 1;
        if self.len() < needed {
            return Err(Error::InsufficientArgs {
                n,
                k,
                needed,
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<Rational>> for BellArgs {
    fn from(xs: Vec<Rational>) -> Self {
        BellArgs(xs)
    }
}

impl FromStr for BellArgs {
    type Err = Error;

    /// Comma-separated `p/q` tokens.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(BellArgs::default());
        }
        s.split(',')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(BellArgs)
    }
}

impl fmt::Display for BellArgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// An evaluated `B_{n,k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BellValue {
    pub n: usize,
    pub k: usize,
    pub value: Rational,
}

fn check_index(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::BellIndex { n, k });
    }
    Ok(())
}

/// Every block-size profile `(l_1, ..., l_m)` with `Σ i l_i = n` and
/// `Σ l_i = k`, where `m = n - k + 1`. Each profile is reported once.
pub fn block_profiles(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, rem: usize, blocks: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == 1 {
            if rem == blocks {
                cur[0] = blocks;
                out.push(cur.clone());
                cur[0] = 0;
            }
            return;
        }
        let max_here = blocks.min(rem / i);
        for l in 0..=max_here {
            let (r, b) = (rem - i * l, blocks - l);
            // the remaining b blocks must be able to absorb r elements with sizes in 1..i
            if b > r || r > b * (i - 1) {
                continue;
            }
            cur[i - 1] = l;
            go(i - 1, r, b, cur, out);
        }
        cur[i - 1] = 0;
    }
    if k == 0 || k > n {
        return Vec::new();
    }
    let m = n - k + 1;
    let mut out = Vec::new();
    go(m, n, k, &mut vec![0; m], &mut out);
    out
}

/// `n! / (Π l_i! Π (i!)^{l_i})`: the number of set partitions with the given
/// block-size profile.
fn profile_multiplicity(n: usize, profile: &[usize]) -> Result<Integer> {
    let mut den = Integer::from(1);
    for (idx, &l) in profile.iter().enumerate() {
        if l == 0 {
            continue;
        }
        den *= factorial(l) * num_traits::pow(factorial(idx + 1), l);
    }
    div_exact(&factorial(n), &den)
        .ok_or_else(|| Error::Internal(format!("multinomial for {profile:?} is not integral")))
}

/// `B_{n,k}` from its defining sum over block-size profiles.
pub fn bell_partition_sum(n: usize, k: usize, args: &BellArgs) -> Result<Rational> {
    args.check(n, k)?;
    let mut total = Rational::zero();
    for profile in block_profiles(n, k) {
        let mult = profile_multiplicity(n, &profile)?;
        let mut term = Rational::from(mult);
        for (idx, &l) in profile.iter().enumerate() {
            if l > 0 {
                term *= args.x(idx + 1).pow(l);
            }
        }
        total += term;
    }
    Ok(total)
}

/// `B_{n,k}` from `B_{m,j} = Σ_s C(m-1, s-1) x_s B_{m-s, j-1}`.
pub fn bell_recurrence(n: usize, k: usize, args: &BellArgs) -> Result<Rational> {
    args.check(n, k)?;
    // only B_{m,j} with m - j <= n - k feed into B_{n,k}
    let gap = n - k;
    // level[d] = B_{j+d, j} for the current j
    let mut level: Vec<Rational> = (0..=gap)
        .map(|d| {
            if d == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    for j in 1..=k {
        let next: Vec<Rational> = (0..=gap)
            .map(|d| {
                let m = j + d;
                (1..=d + 1)
                    .map(|s| {
                        let prev = &level[d + 1 - s];
                        if prev.is_zero() {
                            return Rational::zero();
                        }
                        Rational::from(binomial(m - 1, s as i64 - 1)) * args.x(s) * prev
                    })
                    .sum()
            })
            .collect();
        level = next;
    }
    Ok(level.swap_remove(gap))
}

/// `B_{n,k}(0,1,...,1) = Σ_{i=0}^{k} (-1)^i C(n,i) S(n-i, k-i)`, the number
/// of partitions of an `n`-set into `k` blocks of size at least two.
pub fn bell_zero_one(n: usize, k: usize, table: &StirlingTable) -> Result<Integer> {
    check_index(n, k)?;
    table.ensure_covers(n)?;
    let mut total = Integer::zero();
    for i in 0..=k {
        let s = table.get(n - i, k - i)?;
        if !s.is_zero() {
            total += sign(i) * binomial(n, i as i64) * s;
        }
    }
    Ok(total)
}

/// `B_{n,k}(1/2, 1/3, ..., 1/(n-k+2))
///   = n!/(n+k)! Σ_{i=0}^{k} (-1)^{k-i} C(n+k, k-i) S(n+i, i)`.
pub fn bell_reciprocal_args(n: usize, k: usize, table: &StirlingTable) -> Result<Rational> {
    check_index(n, k)?;
    table.ensure_covers(n + k)?;
    let mut sum = Integer::zero();
    for i in 0..=k {
        let s = table.get(n + i, i)?;
        if !s.is_zero() {
            sum += sign(k - i) * binomial(n + k, (k - i) as i64) * s;
        }
    }
    Rational::new(sum * factorial(n), factorial(n + k))
}

/// Both sides of
/// `B_{n,k}(x_2/2, ..., x_{n-k+2}/(n-k+2)) = n!/(n+k)! B_{n+k,k}(0, x_2, ..., x_{n+1})`.
///
/// `tail[j]` holds `x_{j+2}`; at least `n` entries are required.
pub fn bell_scaling_identity_lhs_rhs(
    n: usize,
    k: usize,
    tail: &[Rational],
) -> Result<(Rational, Rational)> {
    check_index(n, k)?;
    if tail.len() < n {
        return Err(Error::InsufficientArgs {
            n,
            k,
            needed: n,
            got: tail.len(),
        });
    }
    let scaled = BellArgs::from_fn(n - k + 1, |i| {
        &tail[i - 1] * Rational::new(1, i as i64 + 1).expect("nonzero")
    });
    let lhs = bell_partition_sum(n, k, &scaled)?;

    let shifted = BellArgs::from_fn(n + 1, |i| {
        if i == 1 {
            Rational::zero()
        } else {
            tail[i - 2].clone()
        }
    });
    let rhs =
        Rational::new(factorial(n), factorial(n + k))? * bell_partition_sum(n + k, k, &shifted)?;
    Ok((lhs, rhs))
}
