//! Stirling numbers of the second kind.
//!
//! Conventions: `S(0,0) = 1`, `S(n,0) = 0` for `n >= 1` and `S(n,k) = 0` for
//! `k > n`. The Bernoulli formula that evaluates `S(n+i, i)` at `i = 0`
//! depends on the first two.

use num_traits::{One, Zero};

use crate::arith::{binomial, div_exact, factorial, sign, Integer};
use crate::error::{Error, Result};

/// `S(n,k)` via the alternating sum `(1/k!) Σ_{l=1}^{k} (-1)^{k-l} C(k,l) l^n`.
pub fn stirling_explicit(n: usize, k: usize) -> Result<Integer> {
    if k > n {
        return Ok(Integer::zero());
    }
    if k == 0 {
        return Ok(if n == 0 {
            Integer::one()
        } else {
            Integer::zero()
        });
    }
    let sum: Integer = (1..=k)
        .map(|l| sign(k - l) * binomial(k, l as i64) * num_traits::pow(Integer::from(l), n))
        .sum();
    div_exact(&sum, &factorial(k)).ok_or_else(|| {
        Error::Internal(format!(
            "alternating sum for S({n},{k}) is not divisible by {k}!"
        ))
    })
}

/// Triangle of `S(n,k)` for `0 <= k <= n <= max_n`, filled by
/// `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    rows: Vec<Vec<Integer>>,
    zero: Integer,
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![Integer::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![Integer::zero(); n + 1];
            for k in 1..=n {
                let carry = if k < n { &prev[k] * k } else { Integer::zero() };
                row[k] = carry + &prev[k - 1];
            }
            rows.push(row);
        }
        StirlingTable {
            rows,
            zero: Integer::zero(),
        }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Fails unless the table has rows up to `n`.
    pub fn ensure_covers(&self, n: usize) -> Result<()> {
        if n > self.max_n() {
            return Err(Error::TableTooSmall {
                needed: n,
                have: self.max_n(),
            });
        }
        Ok(())
    }

    /// `S(n,k)`; zero for `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Result<&Integer> {
        self.ensure_covers(n)?;
        Ok(self.rows[n].get(k).unwrap_or(&self.zero))
    }

    pub fn row(&self, n: usize) -> Option<&[Integer]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// `(n, k, S(n,k))` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Integer)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, v)| (n, k, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts set partitions of `{0..n}` by number of blocks, via restricted
    /// growth strings.
    fn partition_counts(n: usize) -> Vec<u64> {
        fn go(pos: usize, n: usize, blocks: usize, counts: &mut [u64]) {
            if pos == n {
                counts[blocks] += 1;
                return;
            }
            for b in 0..=blocks {
                go(pos + 1, n, blocks.max(b + 1), counts);
            }
        }
        let mut counts = vec![0; n + 1];
        go(0, n, 0, &mut counts);
        counts
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(partition_counts(4)[2], 7);
        assert_eq!(partition_counts(6)[2], 31);
        assert_eq!(stirling_explicit(4, 2).unwrap(), Integer::from(7));
        assert_eq!(stirling_explicit(6, 2).unwrap(), Integer::from(31));
        for n in 0..=20 {
            assert_eq!(stirling_explicit(n, n).unwrap(), Integer::one());
        }
        assert_eq!(stirling_explicit(3, 5).unwrap(), Integer::zero());
        assert_eq!(stirling_explicit(3, 0).unwrap(), Integer::zero());
    }

    #[test]
    fn table_examples() {
        assert_eq!(StirlingTable::new(4).get(4, 2).unwrap(), &Integer::from(7));
        assert_eq!(partition_counts(5)[3], 25);
        assert_eq!(StirlingTable::new(5).get(5, 3).unwrap(), &Integer::from(25));
        assert_eq!(StirlingTable::new(3).get(3, 0).unwrap(), &Integer::zero());
        assert_eq!(StirlingTable::new(0).get(0, 0).unwrap(), &Integer::one());
        assert_eq!(StirlingTable::new(3).get(3, 9).unwrap(), &Integer::zero());
        assert_eq!(
            StirlingTable::new(3).get(4, 1),
            Err(Error::TableTooSmall { needed: 4, have: 3 })
        );
    }

    #[test]
    fn table_conventions() {
        let t = StirlingTable::new(30);
        for n in 1..=30 {
            assert!(t.get(n, 0).unwrap().is_zero());
            assert!(t.get(n, 1).unwrap().is_one());
            assert!(t.get(n, n).unwrap().is_one());
        }
        assert!(t.entries().all(|(_, _, v)| *v >= Integer::zero()));
    }

    #[test]
    fn methods_agree_to_60() {
        let t = StirlingTable::new(60);
        for n in 0..=60 {
            for k in 0..=n {
                assert_eq!(
                    &stirling_explicit(n, k).unwrap(),
                    t.get(n, k).unwrap(),
                    "S({n},{k})"
                );
            }
        }
    }

    #[test]
    fn row_sums_count_partitions() {
        let t = StirlingTable::new(10);
        for n in 0..=10 {
            let brute = partition_counts(n);
            let total: u64 = brute.iter().sum();
            let sum: Integer = t.row(n).unwrap().iter().sum();
            assert_eq!(sum, Integer::from(total));
            for (k, &c) in brute.iter().enumerate() {
                assert_eq!(t.get(n, k).unwrap(), &Integer::from(c));
            }
        }
    }

    #[test]
    fn entries_are_lexicographic() {
        let t = StirlingTable::new(3);
        let idx: Vec<_> = t.entries().map(|(n, k, _)| (n, k)).collect();
        let mut sorted = idx.clone();
        sorted.sort();
        assert_eq!(idx, sorted);
        assert_eq!(idx.len(), 10);
    }
}
