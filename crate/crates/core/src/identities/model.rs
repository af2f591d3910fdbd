//! Evaluation back ends for identities that are polynomial in one variable.
//!
//! An identity is written once against [`Model`]; [`Symbolic`] turns every
//! side into a polynomial in the free variable, [`AtPoint`] evaluates the
//! same expression at a rational point. Comparing the two is the pointwise
//! certificate.

use num_traits::Zero;

use crate::euler::EulerCache;
use crate::numeric::Rational;
use crate::poly::{Coeff, Poly};

pub trait Model: Sync {
    type Value: Coeff;

    fn cache(&self) -> &EulerCache;

    /// The free variable.
    fn var(&self) -> Self::Value;

    fn constant(&self, c: Rational) -> Self::Value;

    /// `E_r(u*var + v)`.
    fn euler(&self, r: usize, u: &Rational, v: &Rational) -> Self::Value;

    /// A polynomial in the free variable.
    fn lift(&self, p: &Poly<Rational>) -> Self::Value;

    fn scale(&self, x: Self::Value, c: &Rational) -> Self::Value {
        if c.is_zero() {
            Self::Value::zero()
        } else {
            self.constant(c.clone()) * x
        }
    }
}

pub struct Symbolic<'a> {
    pub cache: &'a EulerCache,
}

impl Model for Symbolic<'_> {
    type Value = Poly<Rational>;

    fn cache(&self) -> &EulerCache {
        self.cache
    }

    fn var(&self) -> Poly<Rational> {
        Poly::x()
    }

    fn constant(&self, c: Rational) -> Poly<Rational> {
        Poly::constant(c)
    }

    fn euler(&self, r: usize, u: &Rational, v: &Rational) -> Poly<Rational> {
        (*self.cache.euler_poly_shifted(r, u, v)).clone()
    }

    fn lift(&self, p: &Poly<Rational>) -> Poly<Rational> {
        p.clone()
    }

    fn scale(&self, x: Poly<Rational>, c: &Rational) -> Poly<Rational> {
        x.scale(c)
    }
}

pub struct AtPoint<'a> {
    pub cache: &'a EulerCache,
    pub t: Rational,
}

impl Model for AtPoint<'_> {
    type Value = Rational;

    fn cache(&self) -> &EulerCache {
        self.cache
    }

    fn var(&self) -> Rational {
        self.t.clone()
    }

    fn constant(&self, c: Rational) -> Rational {
        c
    }

    fn euler(&self, r: usize, u: &Rational, v: &Rational) -> Rational {
        self.cache.euler_at(r, &(u * &self.t + v))
    }

    fn lift(&self, p: &Poly<Rational>) -> Rational {
        p.eval(&self.t)
    }

    fn scale(&self, x: Rational, c: &Rational) -> Rational {
        x * c
    }
}

/// Sample points `0, 1, -1, 2, -2, ...`, `count` of them.
pub fn sample_points(count: usize) -> Vec<Rational> {
    (0..count as i64)
        .map(|i| {
            let mag = (i + 1) / 2;
            Rational::from_integer(if i % 2 == 1 { mag } else { -mag }.into())
        })
        .collect()
}
