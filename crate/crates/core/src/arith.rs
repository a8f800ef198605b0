//! Exact integer and rational arithmetic.
//!
//! [`Integer`] is an arbitrary-precision signed integer. [`Rational`] wraps a
//! reduced fraction with a strictly positive denominator, so derived equality
//! is mathematical equality.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Integer = BigInt;

/// `n!`
pub fn factorial(n: usize) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, k)`, zero when `k` lies outside `0..=n`.
pub fn binomial(n: usize, k: i64) -> Integer {
    if k < 0 || k as u64 > n as u64 {
        return Integer::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = Integer::one();
    // each prefix product is itself a binomial coefficient, so division is exact
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(-1)^e` as a sign multiplier.
#[inline]
pub(crate) fn sign(e: usize) -> i32 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in lowest terms with a positive denominator.
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<Integer>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Integer value, if the denominator is one.
    pub fn to_integer(&self) -> Option<Integer> {
        self.is_integer().then(|| self.numer().clone())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Rational::one();
        for _ in 0..e {
            acc *= self;
        }
        acc
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q`, with an optional sign on either part.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let num: Integer = num.parse().map_err(|_| parse_err("bad numerator"))?;
        let den: Integer = den.parse().map_err(|_| parse_err("bad denominator"))?;
        Rational::new(num, den).map_err(|_| parse_err("zero denominator"))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational::from_integer(n)
    }
}

impl From<&Integer> for Rational {
    fn from(n: &Integer) -> Self {
        Rational::from_integer(n.clone())
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(Integer::from(n))
            }
        }
    )*};
}
from_prim!(i32, i64, u32, u64, usize);

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
// Panics on a zero divisor, like the integer types; use `checked_div` otherwise.
binop!(Div, div);

macro_rules! assignop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            fn $method(&mut self, rhs: Rational) {
                self.0.$method(rhs.0)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            fn $method(&mut self, rhs: &'a Rational) {
                self.0.$method(&rhs.0)
            }
        }
    };
}
assignop!(AddAssign, add_assign);
assignop!(SubAssign, sub_assign);
assignop!(MulAssign, mul_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Exact division of integers, failing if `den` does not divide `num`.
pub(crate) fn div_exact(num: &Integer, den: &Integer) -> Option<Integer> {
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), Integer::from(1));
        assert_eq!(factorial(5), Integer::from(120));
        let mut oracle: u64 = 1;
        for i in 1..=20u64 {
            oracle *= i;
        }
        assert_eq!(oracle, 2432902008176640000);
        assert_eq!(factorial(20), Integer::from(oracle));
    }

    #[test]
    fn factorial_step() {
        for n in 1..=50 {
            assert_eq!(factorial(n), factorial(n - 1) * n);
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), Integer::from(10));
        assert_eq!(binomial(4, 7), Integer::zero());
        assert_eq!(binomial(4, -1), Integer::zero());
        assert_eq!(binomial(0, 0), Integer::one());

        // Pascal triangle oracle built in u64
        let mut row = vec![1u64];
        for _ in 0..30 {
            let mut next = vec![1u64; row.len() + 1];
            for j in 1..row.len() {
                next[j] = row[j - 1] + row[j];
            }
            row = next;
        }
        assert_eq!(row[15], 155117520);
        assert_eq!(binomial(30, 15), Integer::from(row[15]));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=50usize {
            for k in 1..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn construction_is_canonical() {
        assert_eq!(Rational::new(2, 4).unwrap().to_string(), "1/2");
        assert_eq!(Rational::new(3, -6).unwrap().to_string(), "-1/2");
        let z = Rational::new(0, 7).unwrap();
        assert_eq!(z.numer(), &Integer::zero());
        assert_eq!(z.denom(), &Integer::one());
        assert_eq!(z, Rational::zero());
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(r("6/1").to_string(), "6");
        assert_eq!(r("6"), r("12/2"));
        assert_eq!(r(" -3/9 ").to_string(), "-1/3");
        assert_eq!(r("3/-9").to_string(), "-1/3");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert!("1/2/3".parse::<Rational>().is_err());
    }

    #[test]
    fn serde_as_string() {
        let v = r("-691/2730");
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "\"-691/2730\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<Rational>("\"1/0\"").is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| Rational::new(p, q).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!((&a / &b) * (&b / &a), Rational::one());
            }
        }

        #[test]
        fn always_reduced(p in -10_000i64..10_000, q in -10_000i64..10_000) {
            prop_assume!(q != 0);
            let x = Rational::new(p, q).unwrap();
            prop_assert!(x.denom() > &Integer::zero());
            prop_assert_eq!(num_integer::Integer::gcd(x.numer(), x.denom()), Integer::one());
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
