//! Finite-precision p-adic integers and the fermionic integral
//! `I(f) = lim_N sum_{x=0}^{p^N-1} f(x) (-1)^x`, realised as exact
//! truncated sums plus valuation certificates.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::euler::EulerCache;
use crate::numeric::{int, int_pow, multiplicity, rat, Rational};
use crate::poly::Poly;

/// Largest `p^N` any naive `p^N`-term sum will attempt unless told otherwise.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("p = 2 is not supported; p must be an odd prime")]
    EvenPrime,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("{value} is not {p}-integral: {p} divides the denominator")]
    DenominatorNotInvertible { value: String, p: u64 },
    #[error("operands live in different rings: Z/{0}^{1} vs Z/{2}^{3}")]
    Mismatch(u64, u32, u64, u32),
    #[error("{p}^{precision} terms exceed the budget of {budget}")]
    BudgetExceeded { p: u64, precision: u32, budget: u64 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn ensure_odd_prime(p: u64) -> Result<(), PadicError> {
    if p == 2 {
        Err(PadicError::EvenPrime)
    } else if !is_prime(p) {
        Err(PadicError::NotPrime(p))
    } else {
        Ok(())
    }
}

/// `v_p`, with `+inf` for zero. Orders every finite value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, n: u32) -> bool {
        self >= Valuation::Finite(n as i64)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("+inf"),
        }
    }
}

pub fn valuation(r: &Rational, p: u64) -> Valuation {
    if r.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    Valuation::Finite(multiplicity(r.numer(), &p) as i64 - multiplicity(r.denom(), &p) as i64)
}

/// `true` when `r` lies in `Z_p`, i.e. `p` does not divide its denominator.
pub fn is_p_integral(r: &Rational, p: u64) -> bool {
    !(r.denom() % p).is_zero()
}

fn require_integral(r: &Rational, p: u64) -> Result<(), PadicError> {
    if is_p_integral(r, p) {
        Ok(())
    } else {
        Err(PadicError::DenominatorNotInvertible { value: r.to_string(), p })
    }
}

/// A residue class modulo `p^N` for an odd prime `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicInt {
    p: u64,
    precision: u32,
    residue: BigInt,
}

impl PadicInt {
    pub fn new(value: impl Into<BigInt>, p: u64, precision: u32) -> Result<Self, PadicError> {
        ensure_odd_prime(p)?;
        if precision == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        let modulus = BigInt::from(p).pow(precision);
        Ok(PadicInt { p, precision, residue: value.into().mod_floor(&modulus) })
    }

    /// `numerator * denominator^{-1} mod p^N`.
    pub fn from_rational(r: &Rational, p: u64, precision: u32) -> Result<Self, PadicError> {
        ensure_odd_prime(p)?;
        if precision == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        require_integral(r, p)?;
        let modulus = BigInt::from(p).pow(precision);
        let inv = r.denom().modinv(&modulus).expect("denominator coprime to p");
        Self::new(r.numer() * inv, p, precision)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.p).pow(self.precision)
    }

    fn same_ring(&self, other: &Self) -> Result<(), PadicError> {
        if self.p == other.p && self.precision == other.precision {
            Ok(())
        } else {
            Err(PadicError::Mismatch(self.p, self.precision, other.p, other.precision))
        }
    }

    fn with_value(&self, v: BigInt) -> Self {
        PadicInt { p: self.p, precision: self.precision, residue: v.mod_floor(&self.modulus()) }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PadicError> {
        self.same_ring(other)?;
        Ok(self.with_value(&self.residue + &other.residue))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PadicError> {
        self.same_ring(other)?;
        Ok(self.with_value(&self.residue - &other.residue))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PadicError> {
        self.same_ring(other)?;
        Ok(self.with_value(&self.residue * &other.residue))
    }

    pub fn neg(&self) -> Self {
        self.with_value(-&self.residue)
    }
}

fn term_count(p: u64, precision: u32, budget: u64) -> Result<u64, PadicError> {
    ensure_odd_prime(p)?;
    if precision == 0 {
        return Err(PadicError::ZeroPrecision);
    }
    let exceeded = PadicError::BudgetExceeded { p, precision, budget };
    let q = p.checked_pow(precision).ok_or(exceeded.clone())?;
    if q > budget {
        return Err(exceeded);
    }
    Ok(q)
}

/// `sum_{x=0}^{p^N-1} f(x) (-1)^x`, exact. Terms are summed in parallel
/// chunks; exact addition makes the result independent of the split.
pub fn fermionic_sum_naive<F>(f: F, p: u64, precision: u32, budget: u64) -> Result<Rational, PadicError>
where
    F: Fn(u64) -> Rational + Sync,
{
    let q = term_count(p, precision, budget)?;
    Ok((0..q)
        .into_par_iter()
        .fold(Rational::zero, |acc, x| if x % 2 == 0 { acc + f(x) } else { acc - f(x) })
        .reduce(Rational::zero, |a, b| a + b))
}

fn common_denominator(f: &Poly<Rational>) -> BigInt {
    f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn cleared(f: &Poly<Rational>, den: &BigInt) -> Vec<BigInt> {
    f.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect()
}

/// Same sum as [`fermionic_sum_naive`] for a polynomial `f`, with the
/// denominators cleared so the loop runs over integers.
pub fn fermionic_sum_poly(f: &Poly<Rational>, p: u64, precision: u32, budget: u64) -> Result<Rational, PadicError> {
    let q = term_count(p, precision, budget)?;
    let den = common_denominator(f);
    let g = cleared(f, &den);
    let total = (0..q)
        .into_par_iter()
        .fold(BigInt::zero, |acc, x| {
            let x = BigInt::from(x);
            let v = g.iter().rev().fold(BigInt::zero(), |h, c| h * &x + c);
            if x.is_even() {
                acc + v
            } else {
                acc - v
            }
        })
        .reduce(BigInt::zero, |a, b| a + b);
    Ok(Rational::new(total, den))
}

/// The same sum reduced mod `p^N` throughout, in machine words. Requires
/// `p`-integral coefficients; agrees with the residue of the exact sum.
pub fn fermionic_sum_mod(f: &Poly<Rational>, p: u64, precision: u32, budget: u64) -> Result<PadicInt, PadicError> {
    let q = term_count(p, precision, budget)?;
    for c in f.coeffs() {
        require_integral(c, p)?;
    }
    let modulus = q as u128;
    let big_mod = BigInt::from(q);
    let den = common_denominator(f);
    let inv = den.modinv(&big_mod).expect("p-integral denominators");
    let coeffs: Vec<u128> = cleared(f, &den)
        .iter()
        .map(|c| (c * &inv).mod_floor(&big_mod).to_u128().expect("below modulus"))
        .collect();
    let total = (0..q)
        .into_par_iter()
        .map(|x| {
            let xm = x as u128 % modulus;
            let v = coeffs.iter().rev().fold(0u128, |h, c| (h * xm + c) % modulus);
            if x % 2 == 0 {
                v
            } else {
                (modulus - v) % modulus
            }
        })
        .reduce(|| 0u128, |a, b| (a + b) % modulus);
    PadicInt::new(BigInt::from(total), p, precision)
}

/// `((-1)^{q-1} E_n(a+q) + E_n(a)) / 2`, which equals
/// `sum_{i<q} (-1)^i (a+i)^n` by telescoping `E_n(y+1) + E_n(y) = 2y^n`.
pub fn fermionic_sum_closed(cache: &EulerCache, n: usize, a: &Rational, q: &BigInt) -> Rational {
    let e = cache.euler_poly(n);
    let shifted = e.eval(&(a + Rational::from_integer(q.clone())));
    let lead = if q.is_odd() { shifted } else { -shifted };
    (lead + e.eval(a)) / int(2)
}

/// `v_p(S_N - E_n(a))` where `S_N` is the `p^N`-term truncation of
/// `int (x+a)^n dmu_{-1}`. Witt's formula predicts at least `N`.
pub fn witt_defect(cache: &EulerCache, n: usize, a: &Rational, p: u64, precision: u32) -> Result<Valuation, PadicError> {
    ensure_odd_prime(p)?;
    if precision == 0 {
        return Err(PadicError::ZeroPrecision);
    }
    require_integral(a, p)?;
    let q = BigInt::from(p).pow(precision);
    let s = fermionic_sum_closed(cache, n, a, &q);
    Ok(valuation(&(s - cache.euler_at(n, a)), p))
}

/// Truncation defects for `I(f_1) = I(f_-) = -I(f) + 2f(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lem1Defects {
    /// `v_p(S_1 - (-S + 2f(0)))`, `S_1 = sum f(x+1)(-1)^x`.
    pub shift: Valuation,
    /// `v_p(S_- - (-S + 2f(0)))`, `S_- = sum f(-x)(-1)^x`.
    pub reflect: Valuation,
    /// `v_p(S - f(0))`, only for even `f`.
    pub even: Option<Valuation>,
}

impl Lem1Defects {
    pub fn min(&self) -> Valuation {
        let m = self.shift.min(self.reflect);
        self.even.map_or(m, |e| m.min(e))
    }
}

pub fn is_even_poly(f: &Poly<Rational>) -> bool {
    f.coeffs().iter().skip(1).step_by(2).all(Zero::is_zero)
}

pub fn lem1_defect(f: &Poly<Rational>, p: u64, precision: u32, budget: u64) -> Result<Lem1Defects, PadicError> {
    for c in f.coeffs() {
        require_integral(c, p)?;
    }
    let one = Rational::one();
    let f_shift = f.compose_affine(&one, &one);
    let f_reflect = f.compose_affine(&-one.clone(), &Rational::zero());
    let s = fermionic_sum_poly(f, p, precision, budget)?;
    let s1 = fermionic_sum_poly(&f_shift, p, precision, budget)?;
    let s_minus = fermionic_sum_poly(&f_reflect, p, precision, budget)?;
    let f0 = f.coeff(0);
    let target = -s.clone() + &f0 * int(2);
    Ok(Lem1Defects {
        shift: valuation(&(s1 - &target), p),
        reflect: valuation(&(s_minus - &target), p),
        even: is_even_poly(f).then(|| valuation(&(s - f0), p)),
    })
}

/// Random polynomial of degree at most `max_degree` whose coefficients are
/// small rationals with denominators prime to `p`.
pub fn random_p_integral_poly<R: Rng>(rng: &mut R, p: u64, max_degree: usize) -> Poly<Rational> {
    let degree = rng.gen_range(0..=max_degree);
    let coeffs = (0..=degree)
        .map(|_| {
            let num = rng.gen_range(-40i64..=40);
            let den = loop {
                let d = rng.gen_range(1i64..=24);
                if !(d as u64).is_multiple_of(p) {
                    break d;
                }
            };
            rat(num, den)
        })
        .collect();
    Poly::new(coeffs)
}

/// `(x + a)^n` as a function of an integer argument, for naive sums.
pub fn shifted_power(a: &Rational, n: usize) -> impl Fn(u64) -> Rational + Sync + '_ {
    move |x| int_pow(&(a + int(x)), n as u32)
}
