//! Truncated formal power series with exact rational coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stands for `Σ_{j<=N} c_j t^j mod t^{N+1}`.
//! These are the generating-function oracles that the closed forms are
//! checked against. Operations on series of different orders are errors.

use std::ops::Index;

use crate::arith::{factorial, Rational};
use crate::bell::BellArgs;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Coefficients `c_0..c_N`. An empty vector is treated as the zero series
    /// of order 0.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |j| {
            if j == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// `e^t`
    pub fn exp(order: usize) -> Self {
        Self::from_fn(order, inv_factorial)
    }

    /// `Σ_{j>=0} t^j/(j+1)!`, i.e. `(e^t - 1)/t`.
    pub fn exp_minus_one_over_t(order: usize) -> Self {
        Self::from_fn(order, |j| inv_factorial(j + 1))
    }

    /// Series with `c_n = a_n / n!` for the exponential generating function of `a`.
    pub fn from_egf(order: usize, mut a: impl FnMut(usize) -> Rational) -> Self {
        Self::from_fn(order, |j| a(j) * inv_factorial(j))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `n! c_n`: the sequence value at `n` when read as an EGF.
    pub fn egf_coeff(&self, n: usize) -> Rational {
        &self.coeffs[n] * Rational::from(factorial(n))
    }

    fn same_order(&self, other: &Self) -> Result<usize> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(self.order())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.same_order(other)?;
        Ok(Self::from_fn(n, |j| &self.coeffs[j] + &other.coeffs[j]))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let n = self.same_order(other)?;
        Ok(Self::from_fn(n, |j| &self.coeffs[j] - &other.coeffs[j]))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.order(), |j| &self.coeffs[j] * c)
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.same_order(other)?;
        Ok(Self::from_fn(n, |j| {
            (0..=j)
                .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[j - i].is_zero())
                .map(|i| &self.coeffs[i] * &other.coeffs[j - i])
                .sum()
        }))
    }

    /// `b` with `self * b = 1 mod t^{N+1}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_c0 = c0.recip()?;
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_c0.clone());
        for j in 1..=self.order() {
            let acc: Rational = (1..=j)
                .filter(|&i| !self.coeffs[i].is_zero())
                .map(|i| &self.coeffs[i] * &out[j - i])
                .sum();
            out.push(-(acc * &inv_c0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self^e` by repeated multiplication.
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("orders match");
        }
        acc
    }
}

impl Index<usize> for TruncatedSeries {
    type Output = Rational;

    fn index(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }
}

fn inv_factorial(n: usize) -> Rational {
    Rational::new(1, factorial(n)).expect("factorial is nonzero")
}

/// `B_0..B_N` read off `x/(e^x - 1) = 1 / ((e^x - 1)/x)`.
pub fn bernoulli_series(order: usize) -> Vec<Rational> {
    let gen = TruncatedSeries::exp_minus_one_over_t(order)
        .reciprocal()
        .expect("constant term is 1");
    (0..=order).map(|n| gen.egf_coeff(n)).collect()
}

/// `S(n,k)` as `n! [t^n] (e^t - 1)^k / k!`. Zero when `k > n`.
pub fn stirling_egf_coeff(n: usize, k: usize) -> Rational {
    let base = TruncatedSeries::exp(n)
        .sub(&TruncatedSeries::one(n))
        .expect("same order");
    base.pow(k).scale(&inv_factorial(k)).egf_coeff(n)
}

/// `B_{n,k}(x_1, ...)` as `n! [t^n] (Σ_{m>=1} x_m t^m/m!)^k / k!`.
///
/// Requires `x_1..x_{n-k+1}`; higher `x_m` cannot reach the `t^n` term and
/// are treated as zero. For `k = 0` the power is the constant 1.
pub fn bell_egf_coeff(n: usize, k: usize, args: &BellArgs) -> Result<Rational> {
    if k > n {
        return Err(Error::BellIndex { n, k });
    }
    if k == 0 {
        return Ok(if n == 0 {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    args.check(n, k)?;
    let m_max = n - k + 1;
    let inner = TruncatedSeries::from_fn(n, |m| {
        if m == 0 || m > m_max {
            Rational::zero()
        } else {
            args.x(m) * inv_factorial(m)
        }
    });
    Ok(inner.pow(k).scale(&inv_factorial(k)).egf_coeff(n))
}

/// `B_{n,k}(1/2, 1/3, ...)` as `n! [t^n] ((e^t - 1)/t - 1)^k / k!`, with the
/// inner series built from the exponential rather than from the arguments.
pub fn reciprocal_args_egf_coeff(n: usize, k: usize) -> Rational {
    let inner = TruncatedSeries::exp_minus_one_over_t(n)
        .sub(&TruncatedSeries::one(n))
        .expect("same order");
    inner.pow(k).scale(&inv_factorial(k)).egf_coeff(n)
}
