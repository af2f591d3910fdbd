//! Dense univariate polynomials over a commutative coefficient ring.
//!
//! `Poly<Rational>` is the usual univariate case. `Poly<Poly<Rational>>`
//! is a polynomial in `x` whose coefficients are polynomials in a second
//! indeterminate `a`, which is how the bivariate objects of the identity
//! proofs are represented.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::numeric::{self, format_rational, parse_rational, Rational};

/// Coefficient ring for [`Poly`].
pub trait Coeff:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
{
    fn from_int(n: BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_int(BigInt::from(n))
    }
}

impl Coeff for Rational {
    fn from_int(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl<C: Coeff> Coeff for Poly<C> {
    fn from_int(n: BigInt) -> Self {
        Poly::constant(C::from_int(n))
    }
}

/// Coefficients lowest degree first; the highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `u*x + v`
    pub fn linear(u: C, v: C) -> Self {
        Self::new(vec![v, u])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        num_traits::pow(self.clone(), e as usize)
    }

    /// Formal k-th derivative.
    pub fn derivative_k(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(k)
            .map(|(i, c)| {
                let f = numeric::falling_factorial(i as i64, k as i64).expect("nonnegative");
                C::from_int(f) * c.clone()
            })
            .collect();
        Self::new(coeffs)
    }

    /// `p(u*x + v)`, expanded by the binomial theorem:
    /// the coefficient of `x^j` is `sum_{i>=j} c_i C(i,j) u^j v^(i-j)`.
    pub fn compose_affine(&self, u: &C, v: &C) -> Self {
        let n = self.coeffs.len();
        if n == 0 {
            return Self::zero();
        }
        let powers = |base: &C| {
            let mut out = Vec::with_capacity(n);
            let mut acc = C::one();
            for _ in 0..n {
                out.push(acc.clone());
                acc = acc * base.clone();
            }
            out
        };
        let u_pow = powers(u);
        let v_pow = powers(v);
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = C::zero();
            for i in j..n {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                let b = C::from_int(numeric::binom(i as u64, j as i64));
                acc = acc + b * self.coeffs[i].clone() * v_pow[i - j].clone();
            }
            out.push(acc * u_pow[j].clone());
        }
        Self::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn map<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Rational> {
    /// Lowest-degree-first list of rational strings.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    /// JSON array of rational strings, e.g. `["1/4","0","-3/2","1"]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_coeff_strings()).expect("string array")
    }

    pub fn from_coeff_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, PolyParseError> {
        let coeffs = items
            .iter()
            .map(|s| parse_rational(s.as_ref()).map_err(|e| PolyParseError::Coefficient(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn from_json(s: &str) -> Result<Self, PolyParseError> {
        let items: Vec<String> =
            serde_json::from_str(s).map_err(|e| PolyParseError::Json(e.to_string()))?;
        Self::from_coeff_strings(&items)
    }

    /// Human form in the variable `var`, e.g. `1/4 - 3/2*x^2 + x^3`.
    pub fn to_human(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < Rational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", format_rational(&mag)));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyParseError {
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
    #[error("bad coefficient: {0}")]
    Coefficient(String),
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_human("x"))
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coeff> Add<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Mul<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b.clone();
                let slot = std::mem::replace(&mut out[i + j], C::zero());
                out[i + j] = slot + prod;
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<C: Coeff> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coeff> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}
