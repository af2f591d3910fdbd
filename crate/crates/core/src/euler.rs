//! Euler and Bernoulli polynomials, Euler numbers and the classical power
//! sums.
//!
//! Euler polynomials come from the triangular recurrence
//! `E_n(x) = x^n - 1/2 * sum_{k<n} C(n,k) E_k(x)`, which is the generating
//! function `2e^{xt}/(e^t+1)` multiplied through by `(e^t+1)/2`. Bernoulli
//! polynomials use `sum_{k<=n} C(n+1,k) B_k(x) = (n+1) x^n`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::numeric::{binom, int, int_pow, is_power_of_two, rat, sign, Rational};
use crate::poly::Poly;

type P = Poly<Rational>;

/// Append-only memo tables, safe to share across worker threads.
#[derive(Default)]
pub struct EulerCache {
    euler: RwLock<Vec<Arc<P>>>,
    bernoulli: RwLock<Vec<Arc<P>>>,
    shifted: RwLock<HashMap<(usize, Rational, Rational), Arc<P>>>,
}

impl EulerCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by the free functions of this module.
    pub fn global() -> &'static EulerCache {
        static CACHE: OnceLock<EulerCache> = OnceLock::new();
        CACHE.get_or_init(EulerCache::new)
    }

    /// `E_n(x)`: monic, degree `n`, dyadic coefficients.
    pub fn euler_poly(&self, n: usize) -> Arc<P> {
        if let Some(p) = self.euler.read().unwrap().get(n) {
            return p.clone();
        }
        let mut table = self.euler.write().unwrap();
        let half = rat(1, 2);
        while table.len() <= n {
            let k = table.len();
            let mut acc = P::monomial(Rational::one(), k);
            for (j, ej) in table.iter().enumerate() {
                let c = int(binom(k as u64, j as i64)) * &half;
                acc = &acc - &ej.scale(&c);
            }
            table.push(Arc::new(acc));
        }
        table[n].clone()
    }

    /// `B_n(x)`: monic, degree `n`.
    pub fn bernoulli_poly(&self, n: usize) -> Arc<P> {
        if let Some(p) = self.bernoulli.read().unwrap().get(n) {
            return p.clone();
        }
        let mut table = self.bernoulli.write().unwrap();
        while table.len() <= n {
            let k = table.len();
            let inv = rat(1, k as i64 + 1);
            let mut acc = P::monomial(Rational::one(), k);
            for (j, bj) in table.iter().enumerate() {
                let c = int(binom(k as u64 + 1, j as i64)) * &inv;
                acc = &acc - &bj.scale(&c);
            }
            table.push(Arc::new(acc));
        }
        table[n].clone()
    }

    /// `E_n(u*a + v)` expanded as a polynomial in `a`.
    pub fn euler_poly_shifted(&self, n: usize, u: &Rational, v: &Rational) -> Arc<P> {
        let key = (n, u.clone(), v.clone());
        if let Some(p) = self.shifted.read().unwrap().get(&key) {
            return p.clone();
        }
        let p = Arc::new(self.euler_poly(n).compose_affine(u, v));
        self.shifted.write().unwrap().entry(key).or_insert(p).clone()
    }

    /// `E_n(t)` for a rational `t`.
    pub fn euler_at(&self, n: usize, t: &Rational) -> Rational {
        self.euler_poly(n).eval(t)
    }

    /// `E_n = 2^n E_n(1/2)`, always an integer.
    pub fn euler_number(&self, n: usize) -> Rational {
        let v = int_pow(&int(2), n as u32) * self.euler_at(n, &rat(1, 2));
        assert!(v.is_integer(), "Euler number E_{n} = {v} is not an integer");
        v
    }

    /// `B_n = B_n(0)`.
    pub fn bernoulli_number(&self, n: usize) -> Rational {
        self.bernoulli_poly(n).coeff(0)
    }

    /// `((-1)^m E_n(m+1) + E_n(0)) / 2`.
    pub fn alt_power_sum_closed(&self, m: u64, n: usize) -> Rational {
        let e = self.euler_poly(n);
        (int(sign(m)) * e.eval(&int(m + 1)) + e.coeff(0)) / int(2)
    }

    /// `(B_{n+1}(m+1) - B_{n+1}) / (n+1)`.
    pub fn power_sum_closed(&self, m: u64, n: usize) -> Rational {
        let b = self.bernoulli_poly(n + 1);
        (b.eval(&int(m + 1)) - b.coeff(0)) / int(n as i64 + 1)
    }
}

pub fn euler_poly(n: usize) -> Arc<P> {
    EulerCache::global().euler_poly(n)
}

pub fn bernoulli_poly(n: usize) -> Arc<P> {
    EulerCache::global().bernoulli_poly(n)
}

pub fn euler_number(n: usize) -> Rational {
    EulerCache::global().euler_number(n)
}

pub fn euler_poly_shifted(n: usize, u: &Rational, v: &Rational) -> Arc<P> {
    EulerCache::global().euler_poly_shifted(n, u, v)
}

/// `sum_{j=1}^m (-1)^j j^n`, summed directly.
pub fn alt_power_sum(m: u64, n: usize) -> Rational {
    (1..=m).fold(Rational::zero(), |acc, j| {
        acc + int(sign(j)) * int_pow(&int(j), n as u32)
    })
}

/// `sum_{j=1}^m j^n`, summed directly.
pub fn power_sum(m: u64, n: usize) -> Rational {
    (1..=m).fold(Rational::zero(), |acc, j| acc + int_pow(&int(j), n as u32))
}

/// True when every coefficient denominator is a power of two.
pub fn has_dyadic_coefficients(p: &P) -> bool {
    p.coeffs().iter().all(|c| is_power_of_two(c.denom()))
}
