//! Exact rational scalars and the coefficient trait shared by every ring
//! the engine computes in.

use num::bigint::BigInt;
use num::rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p/q" or "p" (q = 1 implied).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rat::new(n, d))
}

/// Prints as "p/q", with "/q" omitted for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // Good enough for desk-scale magnitudes; split to avoid BigInt->f64 overflow.
    let n = r.numer();
    let d = r.denom();
    let nf = n.to_string().parse::<f64>().unwrap_or(if n.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    });
    let df = d.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
    nf / df
}

/// Coefficient ring shared by exact rationals, sparse Laurent polynomials,
/// and fraction fields over them. Everything the symmetric-function and
/// matrix layers need.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_rat(r: Rat) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }
}

impl Coeff for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }
}

/// Exact integer binomial coefficient; 0 outside 0 <= k <= n, with the single
/// extension binom(-1,-1) = 1 available separately where a definition calls
/// for it.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// binomial with the convention binom(-1,-1) = 1 used by the banded entry
/// tables and the explicit NRS(2) displays.
pub fn binomial_ext(n: i64, k: i64) -> BigInt {
    if n == -1 && k == -1 {
        return BigInt::one();
    }
    binomial(n, k)
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Falling factorial (d)_k = d(d-1)...(d-k+1) for a concrete integer d.
pub fn falling_int(d: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc *= BigInt::from(d - i);
    }
    acc
}

/// Falling factorial of a rational value.
pub fn falling_rat(x: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k as i64 {
        acc *= x - rat(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(format_rat(&parse_rat("6/4").unwrap()), "3/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial_ext(-1, -1), BigInt::one());
        assert_eq!(binomial_ext(-1, 0), BigInt::zero());
        assert_eq!(binomial_ext(2, -1), BigInt::zero());
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_int(4, 2), BigInt::from(12));
        assert_eq!(falling_int(4, 0), BigInt::one());
        assert_eq!(falling_int(3, 5), BigInt::zero());
        assert_eq!(falling_rat(&ratio(7, 2), 2), ratio(35, 4));
    }
}
