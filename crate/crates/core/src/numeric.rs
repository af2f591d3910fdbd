//! Exact integer and rational primitives shared by every other module.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational in canonical reduced form (positive denominator, `0 = 0/1`).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("binomial coefficient needs n >= 0, got n = {0}")]
    NegativeTop(i64),
    #[error("falling factorial needs n >= 0 and q >= 0, got ({0}, {1})")]
    NegativeFalling(i64, i64),
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// `C(n, k)`, with `C(n, k) = 0` whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt, NumericError> {
    if n < 0 {
        return Err(NumericError::NegativeTop(n));
    }
    Ok(binom(n as u64, k))
}

/// Infallible binomial for unsigned top index.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    // acc stays C(n, i) after step i, so the division is exact
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `n (n-1) ... (n-q+1)`; the empty product is 1.
pub fn falling_factorial(n: i64, q: i64) -> Result<BigInt, NumericError> {
    if n < 0 || q < 0 {
        return Err(NumericError::NegativeFalling(n, q));
    }
    Ok((0..q).fold(BigInt::one(), |acc, i| acc * (n - i)))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Exact power; `0^0 = 1`.
pub fn int_pow(base: &Rational, e: u32) -> Rational {
    num_traits::pow(base.clone(), e as usize)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `(-1)^e` as an `i64`.
pub fn sign(e: u64) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Parses `[-]digits[/digits]`. Leading `+`, whitespace and a zero
/// denominator are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, NumericError> {
    let err = || NumericError::Parse(s.to_string());
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !digits(num) || !den.is_none_or(digits) {
        return Err(err());
    }
    let mut numer = BigInt::from_str(num).map_err(|_| err())?;
    if neg {
        numer = -numer;
    }
    let denom = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| err())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(NumericError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

/// Renders in the same grammar `parse_rational` accepts.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Largest `e` with `p^e | n`, for nonzero `n`.
pub(crate) fn multiplicity(n: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    let mut n = n.abs();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        n = q;
        e += 1;
    }
}

pub fn is_power_of_two(n: &BigInt) -> bool {
    n.is_positive() && (n & (n - BigInt::one())).is_zero()
}
