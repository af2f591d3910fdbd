//! Truncated exact power series, used to read Euler and Bernoulli data
//! straight off their generating functions. This path shares nothing with
//! the recurrences in [`crate::euler`] beyond rational arithmetic.

use num_traits::{One, Zero};

use crate::numeric::{factorial, int, Rational};
use crate::poly::Poly;

type P = Poly<Rational>;

/// Coefficients `c^n / n!` of `e^{ct}` for `n < order`.
pub fn exp_series(c: &Rational, order: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(order);
    let mut term = Rational::one();
    for n in 0..order {
        out.push(term.clone());
        term = term * c / int(n as i64 + 1);
    }
    out
}

/// Coefficients of `e^{at}` with `a` symbolic: `a^n / n!`.
pub fn exp_symbolic(order: usize) -> Vec<P> {
    (0..order)
        .map(|n| P::monomial(Rational::one() / int(factorial(n as u64)), n))
        .collect()
}

/// Quotient `num / den` truncated to `order` terms. `den[0]` must be nonzero.
pub fn divide(num: &[P], den: &[Rational], order: usize) -> Vec<P> {
    assert!(den.first().is_some_and(|d| !d.is_zero()), "series denominator must be a unit");
    let inv = Rational::one() / &den[0];
    let mut out: Vec<P> = Vec::with_capacity(order);
    for n in 0..order {
        let mut acc = num.get(n).cloned().unwrap_or_else(P::zero);
        for k in 1..=n.min(den.len().saturating_sub(1)) {
            acc = &acc - &out[n - k].scale(&den[k]);
        }
        out.push(acc.scale(&inv));
    }
    out
}

/// `n! [t^n] 2e^{at}/(e^t+1)` for `n < order`, as polynomials in `a`.
pub fn euler_polys(order: usize) -> Vec<P> {
    let num: Vec<P> = exp_symbolic(order).iter().map(|c| c.scale(&int(2))).collect();
    let mut den = exp_series(&Rational::one(), order);
    den[0] += Rational::one();
    scale_by_factorials(divide(&num, &den, order))
}

/// `n! [t^n] t e^{at}/(e^t-1)`, written as `e^{at} / ((e^t-1)/t)`.
pub fn bernoulli_polys(order: usize) -> Vec<P> {
    let num = exp_symbolic(order);
    let den: Vec<Rational> = (0..order)
        .map(|n| Rational::one() / int(factorial(n as u64 + 1)))
        .collect();
    scale_by_factorials(divide(&num, &den, order))
}

/// `n! [t^n] 2e^t/(e^{2t}+1)`, the Euler numbers.
pub fn euler_numbers(order: usize) -> Vec<Rational> {
    let num: Vec<P> = exp_series(&Rational::one(), order)
        .into_iter()
        .map(|c| P::constant(c * int(2)))
        .collect();
    let mut den = exp_series(&int(2), order);
    den[0] += Rational::one();
    scale_by_factorials(divide(&num, &den, order))
        .into_iter()
        .map(|p| p.coeff(0))
        .collect()
}

fn scale_by_factorials(series: Vec<P>) -> Vec<P> {
    series
        .into_iter()
        .enumerate()
        .map(|(n, c)| c.scale(&int(factorial(n as u64))))
        .collect()
}
