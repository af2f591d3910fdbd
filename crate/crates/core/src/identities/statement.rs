//! Every checkable statement, with the two sides of its equality.
//!
//! Summands of the form `C(r, k) * E_{r-k}(..)` with `k > r` are dropped
//! before the Euler factor is built, so no negative index is ever formed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::model::Model;
use super::{CheckError, Param};
use crate::euler::{alt_power_sum, power_sum, EulerCache};
use crate::numeric::{binom, factorial, falling_factorial, int, int_pow, rat, sign, Rational};
use crate::poly::{Coeff, Poly};
use crate::series;

macro_rules! checker_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Stable identifiers, one per verifiable statement.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CheckerId {
            $($variant),*
        }

        impl CheckerId {
            pub const ALL: &'static [CheckerId] = &[$(CheckerId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CheckerId::$variant => $name),*
                }
            }
        }

        impl FromStr for CheckerId {
            type Err = CheckError;

            fn from_str(s: &str) -> Result<Self, CheckError> {
                match s {
                    $($name => Ok(CheckerId::$variant),)*
                    _ => Err(CheckError::UnknownId(s.to_string())),
                }
            }
        }
    };
}

checker_ids! {
    Reflection => "reflection",
    Complement => "complement",
    Boundary => "boundary",
    GfConsistency => "gf_consistency",
    EulerAltSum => "euler_alt_sum",
    BernoulliPowerSum => "bernoulli_power_sum",
    Wsp7 => "wsp7",
    Wsp9 => "wsp9",
    Thm1 => "thm1",
    Cro0 => "cro0",
    Cro1 => "cro1",
    Cro2 => "cro2",
    RecurrenceOdd => "recurrence_odd",
    Sun => "sun",
    SunCor => "sun_cor",
    Thm2 => "thm2",
    Thm2Cro1 => "thm2_cro1",
    Thm2Cro2 => "thm2_cro2",
    Thm3 => "thm3",
    Thm3_1a => "thm3_1a",
    Thm3_1b => "thm3_1b",
    Thm3_1c => "thm3_1c",
    Thm3_1d => "thm3_1d",
    Rem2_1 => "rem2_1",
    FerSim => "fersim",
    FerSim3 => "fersim3",
    Witt => "witt",
    Lem1 => "lem1",
}

impl fmt::Display for CheckerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A checker together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    /// `E_n(1-a) = (-1)^n E_n(a)`
    Reflection { n: u32 },
    /// `(-1)^n E_n(-a) + E_n(a) = 2a^n`
    Complement { n: u32 },
    /// `E_n(1) = (-1)^n E_n(0)`, and `= 1` at `n = 0`, `-E_n(0)` otherwise.
    Boundary { n: u32 },
    /// Recurrence output against `n! [t^n] 2e^{at}/(e^t+1)`.
    GfConsistency { n: u32 },
    /// `sum_{j=1}^m (-1)^j j^n = ((-1)^m E_n(m+1) + E_n(0)) / 2`
    EulerAltSum { m: u32, n: u32 },
    /// `sum_{j=1}^m j^n = (B_{n+1}(m+1) - B_{n+1}) / (n+1)`
    BernoulliPowerSum { m: u32, n: u32 },
    Wsp7 { m: u32, n: u32 },
    Wsp9 { m: u32, n: u32 },
    Thm1 { m: u32, n: u32, q: u32, k: u32 },
    Cro0 { n: u32, q: u32 },
    Cro1 { m: u32, n: u32 },
    Cro2 { n: u32 },
    RecurrenceOdd { n: u32 },
    /// Symbolic in `b`, with `c = 1 - a - b`.
    Sun { m: u32, n: u32, a: Rational },
    SunCor { m: u32, n: u32 },
    Thm2 { m: u32, n: u32, s: u32, k: u32 },
    Thm2Cro1 { n: u32, k: u32 },
    Thm2Cro2 { n: u32, k: u32 },
    Thm3 { m: u32, k: u32 },
    /// Parts 1-4; `aux` is `l` for part 3 and `j` for part 4, unused otherwise.
    Thm3_1 { part: u8, m: u32, k: u32, aux: u32 },
    Rem2_1 { m: u32 },
    /// `E_n(a+1) + E_n(a) = 2a^n`
    FerSim { n: u32 },
    /// `(-1)^{q-1} E_n(a+q) + E_n(a) = 2 sum_{i<q} (-1)^i (a+i)^n`
    FerSim3 { n: u32, q: u32 },
    Witt { n: u32, a: Rational, p: u64, precision: u32, naive: bool, budget: u64 },
    Lem1 { p: u64, precision: u32, sample: u32, seed: u64, budget: u64 },
}

/// Pairs that must agree; the first is the statement proper, the rest are
/// sub-lemmas checked along the way.
pub struct Sides<V> {
    pub pairs: Vec<(V, V)>,
}

impl<V: Coeff> Sides<V> {
    fn one(lhs: V, rhs: V) -> Self {
        Sides { pairs: vec![(lhs, rhs)] }
    }

    fn and(mut self, lhs: V, rhs: V) -> Self {
        self.pairs.push((lhs, rhs));
        self
    }

    /// First nonzero difference, or zero when every pair agrees.
    pub fn residual(self) -> V {
        self.pairs
            .into_iter()
            .map(|(l, r)| l - r)
            .find(|d| !d.is_zero())
            .unwrap_or_else(V::zero)
    }
}

fn b(n: u32, k: i64) -> Rational {
    int(binom(n as u64, k))
}

fn sg(e: u32) -> Rational {
    int(sign(e as u64))
}

fn bi(n: u32, k: u32) -> BigInt {
    binom(n as u64, k as i64)
}

fn usage(msg: impl Into<String>) -> Result<(), CheckError> {
    Err(CheckError::Usage(msg.into()))
}

impl Statement {
    pub fn id(&self) -> CheckerId {
        use Statement::*;
        match self {
            Reflection { .. } => CheckerId::Reflection,
            Complement { .. } => CheckerId::Complement,
            Boundary { .. } => CheckerId::Boundary,
            GfConsistency { .. } => CheckerId::GfConsistency,
            EulerAltSum { .. } => CheckerId::EulerAltSum,
            BernoulliPowerSum { .. } => CheckerId::BernoulliPowerSum,
            Wsp7 { .. } => CheckerId::Wsp7,
            Wsp9 { .. } => CheckerId::Wsp9,
            Thm1 { .. } => CheckerId::Thm1,
            Cro0 { .. } => CheckerId::Cro0,
            Cro1 { .. } => CheckerId::Cro1,
            Cro2 { .. } => CheckerId::Cro2,
            RecurrenceOdd { .. } => CheckerId::RecurrenceOdd,
            Sun { .. } => CheckerId::Sun,
            SunCor { .. } => CheckerId::SunCor,
            Thm2 { .. } => CheckerId::Thm2,
            Thm2Cro1 { .. } => CheckerId::Thm2Cro1,
            Thm2Cro2 { .. } => CheckerId::Thm2Cro2,
            Thm3 { .. } => CheckerId::Thm3,
            Thm3_1 { part: 1, .. } => CheckerId::Thm3_1a,
            Thm3_1 { part: 2, .. } => CheckerId::Thm3_1b,
            Thm3_1 { part: 3, .. } => CheckerId::Thm3_1c,
            Thm3_1 { .. } => CheckerId::Thm3_1d,
            Rem2_1 { .. } => CheckerId::Rem2_1,
            FerSim { .. } => CheckerId::FerSim,
            FerSim3 { .. } => CheckerId::FerSim3,
            Witt { .. } => CheckerId::Witt,
            Lem1 { .. } => CheckerId::Lem1,
        }
    }

    /// Rejects parameters outside the range the statement is made for.
    pub fn validate(&self) -> Result<(), CheckError> {
        use Statement::*;
        match *self {
            EulerAltSum { m, .. } | BernoulliPowerSum { m, .. } if m == 0 => usage("m must be >= 1"),
            Thm1 { m, n, q, k } => {
                if k % 2 == 0 {
                    Err(CheckError::EvenK(k))
                } else if m + n == 0 {
                    usage("thm1 needs m + n > 0")
                } else if q == 0 {
                    usage("thm1 needs q >= 1")
                } else {
                    Ok(())
                }
            }
            Cro0 { q, .. } if q % 2 == 0 => usage(format!("cro0 needs odd q, got {q}")),
            Cro1 { m, n } if m + n == 0 => usage("cro1 needs m + n > 0"),
            Thm2 { m, n, s, .. } => {
                if m + n == 0 {
                    usage("thm2 needs m + n > 0")
                } else if s == 0 {
                    usage("thm2 needs s >= 1")
                } else {
                    Ok(())
                }
            }
            Thm3 { m, k } if k > m => usage(format!("thm3 needs 0 <= k <= m, got k={k}, m={m}")),
            Thm3_1 { part, m, k, aux } => {
                let ok = match part {
                    1 => k <= m,
                    2 => k < m,
                    3 => k <= m && aux + k < m,
                    4 => (1..=m).contains(&aux) && k <= m,
                    _ => false,
                };
                if ok {
                    Ok(())
                } else {
                    usage(format!("thm3_1 part {part} out of range: m={m}, k={k}, aux={aux}"))
                }
            }
            Rem2_1 { m } if m < 3 => usage("rem2_1 needs m >= 3"),
            FerSim3 { q: 0, .. } => usage("fersim3 needs q >= 1"),
            _ => Ok(()),
        }
    }

    /// Named parameters in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, Param)> {
        use Param::{Int, Rat};
        use Statement::*;
        let i = |v: u32| Int(v as i64);
        match self {
            Reflection { n } | Complement { n } | Boundary { n } | GfConsistency { n } | Cro2 { n }
            | RecurrenceOdd { n } | FerSim { n } => vec![("n", i(*n))],
            EulerAltSum { m, n } | BernoulliPowerSum { m, n } | Wsp7 { m, n } | Wsp9 { m, n }
            | Cro1 { m, n } | SunCor { m, n } => vec![("m", i(*m)), ("n", i(*n))],
            Thm1 { m, n, q, k } => vec![("m", i(*m)), ("n", i(*n)), ("q", i(*q)), ("k", i(*k))],
            Cro0 { n, q } => vec![("n", i(*n)), ("q", i(*q))],
            Sun { m, n, a } => vec![("m", i(*m)), ("n", i(*n)), ("a", Rat(a.clone()))],
            Thm2 { m, n, s, k } => vec![("m", i(*m)), ("n", i(*n)), ("s", i(*s)), ("k", i(*k))],
            Thm2Cro1 { n, k } | Thm2Cro2 { n, k } => vec![("n", i(*n)), ("k", i(*k))],
            Thm3 { m, k } => vec![("m", i(*m)), ("k", i(*k))],
            Thm3_1 { part, m, k, aux } => {
                let mut v = vec![("m", i(*m)), ("k", i(*k))];
                match part {
                    3 => v.push(("l", i(*aux))),
                    4 => v.push(("j", i(*aux))),
                    _ => {}
                }
                v
            }
            Rem2_1 { m } => vec![("m", i(*m))],
            FerSim3 { n, q } => vec![("n", i(*n)), ("q", i(*q))],
            Witt { n, a, p, precision, .. } => vec![
                ("p", Int(*p as i64)),
                ("N", i(*precision)),
                ("n", i(*n)),
                ("a", Rat(a.clone())),
            ],
            Lem1 { p, precision, sample, seed, .. } => vec![
                ("p", Int(*p as i64)),
                ("N", i(*precision)),
                ("sample", i(*sample)),
                ("seed", Int(*seed as i64)),
            ],
        }
    }

    /// Upper bound on the degree of both sides in the free variable, for
    /// statements that are polynomial identities.
    pub fn degree_bound(&self) -> Option<usize> {
        use Statement::*;
        let d = match *self {
            Reflection { n } | Complement { n } | GfConsistency { n } | FerSim { n } | FerSim3 { n, .. } => n,
            Wsp7 { m, n } | Sun { m, n, .. } => m + n,
            Wsp9 { m, n } => m + n + 1,
            Thm1 { m, n, q, .. } => m + n + 2 * q,
            Thm2 { m, n, .. } => m + n + 2,
            Thm3 { m, .. } => 2 * m,
            _ => return None,
        };
        Some(d as usize)
    }

    pub fn is_symbolic(&self) -> bool {
        self.degree_bound().is_some()
    }

    pub fn is_valuation(&self) -> bool {
        matches!(self, Statement::Witt { .. } | Statement::Lem1 { .. })
    }

    /// Both sides of a polynomial identity, through `model`.
    pub fn sides<M: Model>(&self, model: &M) -> Option<Sides<M::Value>> {
        use Statement::*;
        let sides = match *self {
            Reflection { n } => reflection(model, n),
            Complement { n } => complement(model, n),
            GfConsistency { n } => {
                let gf = series::euler_polys(n as usize + 1).pop().expect("nonempty");
                Sides::one(model.euler(n as usize, &int(1), &int(0)), model.lift(&gf))
            }
            FerSim { n } => fersim(model, n),
            FerSim3 { n, q } => fersim3(model, n, q),
            Wsp7 { m, n } => wsp7(model, m, n),
            Wsp9 { m, n } => wsp9(model, m, n),
            Thm1 { m, n, q, k } => thm1(model, m, n, q, k),
            Sun { m, n, ref a } => sun(model, m, n, a),
            Thm2 { m, n, s, k } => thm2(model, m, n, s, k),
            Thm3 { m, k } => thm3(model, m, k),
            _ => return None,
        };
        Some(sides)
    }

    /// Both sides of an identity between rational numbers.
    pub fn numeric_sides(&self, cache: &EulerCache) -> Option<Sides<Rational>> {
        use Statement::*;
        let e0 = |r: u32| cache.euler_poly(r as usize).coeff(0);
        let sides = match *self {
            Boundary { n } => {
                let e = cache.euler_poly(n as usize);
                let at_one = e.eval(&Rational::one());
                let cased = if n == 0 { Rational::one() } else { -e.coeff(0) };
                Sides::one(at_one.clone(), sg(n) * e.coeff(0)).and(at_one, cased)
            }
            EulerAltSum { m, n } => Sides::one(
                alt_power_sum(m as u64, n as usize),
                cache.alt_power_sum_closed(m as u64, n as usize),
            ),
            BernoulliPowerSum { m, n } => Sides::one(
                power_sum(m as u64, n as usize),
                cache.power_sum_closed(m as u64, n as usize),
            ),
            Cro0 { n, q } => {
                let lhs = (0..=n + q).fold(Rational::zero(), |acc, i| {
                    let ff = falling_factorial((n + q + i) as i64, q as i64).expect("nonnegative");
                    acc + b(n + q, i as i64) * int(ff) * e0(n + i)
                });
                Sides::one(lhs, Rational::zero())
            }
            Cro1 { m, n } => {
                let part = |m: u32, n: u32| {
                    (0..=m + 1).fold(Rational::zero(), |acc, i| {
                        acc + b(m + 1, i as i64) * int(n + i + 1) * e0(n + i)
                    })
                };
                Sides::one(part(m, n) + sg(m + n) * part(n, m), Rational::zero())
            }
            Cro2 { n } => Sides::one(cro2_sum(cache, n), Rational::zero()),
            RecurrenceOdd { n } => {
                let direct = e0(2 * n + 1);
                Sides::one(euler_zero_via_recurrence(cache, n), direct.clone())
                    .and(euler_zero_via_recurrence_odd_terms(cache, n), direct)
            }
            SunCor { m, n } => {
                let lhs = (0..=m).fold(Rational::zero(), |acc, i| {
                    let e = cache.euler_number((n + i) as usize);
                    acc + b(m, i as i64) * e / int_pow(&int(2), n + i)
                });
                let rhs = (0..=n).fold(Rational::zero(), |acc, j| {
                    acc + b(n, j as i64) * cache.euler_at((m + j) as usize, &rat(-1, 2))
                });
                Sides::one(sg(m) * lhs, sg(n) * rhs)
            }
            Thm2Cro1 { n, k } => Sides::one(thm2_cro1_sum(cache, n, k), Rational::zero()),
            Thm2Cro2 { n, k } => Sides::one(thm2_cro2_sum(cache, n, k), Rational::zero()),
            Thm3_1 { part, m, k, aux } => thm3_1(cache, part, m, k, aux),
            Rem2_1 { m } => {
                let lhs = (0..=m).fold(Rational::zero(), |acc, i| {
                    let r = m + i;
                    acc + b(m, i as i64) * int(r as i64 * (r as i64 - 1) * (r as i64 - 2)) * e0(r - 3)
                });
                Sides::one(lhs, Rational::zero())
            }
            _ => return None,
        };
        Some(sides)
    }
}

fn reflection<M: Model>(model: &M, n: u32) -> Sides<M::Value> {
    let n_ = n as usize;
    let lhs = model.euler(n_, &int(-1), &int(1));
    let rhs = model.scale(model.euler(n_, &int(1), &int(0)), &sg(n));
    Sides::one(lhs, rhs)
}

fn complement<M: Model>(model: &M, n: u32) -> Sides<M::Value> {
    let n_ = n as usize;
    let lhs = model.scale(model.euler(n_, &int(-1), &int(0)), &sg(n)) + model.euler(n_, &int(1), &int(0));
    let rhs = model.scale(model.var().pow_u(n), &int(2));
    Sides::one(lhs, rhs)
}

fn fersim<M: Model>(model: &M, n: u32) -> Sides<M::Value> {
    let n_ = n as usize;
    let lhs = model.euler(n_, &int(1), &int(1)) + model.euler(n_, &int(1), &int(0));
    let rhs = model.scale(model.var().pow_u(n), &int(2));
    Sides::one(lhs, rhs)
}

fn fersim3<M: Model>(model: &M, n: u32, q: u32) -> Sides<M::Value> {
    let n_ = n as usize;
    let one = int(1);
    let e_at = |shift: u32| model.euler(n_, &one, &int(shift));
    let lhs = model.scale(e_at(q), &sg(q - 1)) + e_at(0);
    let rhs = (0..q).fold(M::Value::zero(), |acc, i| {
        let term = (model.var() + model.constant(int(i))).pow_u(n);
        acc + model.scale(term, &(int(2) * sg(i)))
    });
    // the same left side, telescoped from the instances F(a+i+1) + F(a+i)
    let telescoped = (0..q).fold(M::Value::zero(), |acc, i| {
        acc + model.scale(e_at(i + 1) + e_at(i), &sg(i))
    });
    Sides::one(lhs.clone(), rhs).and(telescoped, lhs)
}

fn wsp7<M: Model>(model: &M, m: u32, n: u32) -> Sides<M::Value> {
    let (one, zero, minus) = (int(1), int(0), int(-1));
    let lhs = (0..=m).fold(M::Value::zero(), |acc, i| {
        acc + model.scale(model.euler((n + i) as usize, &one, &zero), &b(m, i as i64))
    });
    let rhs = (0..=n).fold(M::Value::zero(), |acc, j| {
        acc + model.scale(model.euler((m + j) as usize, &minus, &zero), &b(n, j as i64))
    });
    Sides::one(model.scale(lhs, &sg(m)), model.scale(rhs, &sg(n)))
}

fn wsp9<M: Model>(model: &M, m: u32, n: u32) -> Sides<M::Value> {
    let (one, zero, minus) = (int(1), int(0), int(-1));
    let first = (0..=m).fold(M::Value::zero(), |acc, i| {
        let c = b(m + 1, i as i64) * int(n + i + 1);
        acc + model.scale(model.euler((n + i) as usize, &one, &zero), &c)
    });
    let second = (0..=n).fold(M::Value::zero(), |acc, j| {
        let c = b(n + 1, j as i64) * int(m + j + 1);
        acc + model.scale(model.euler((m + j) as usize, &minus, &zero), &c)
    });
    let lhs = model.scale(first, &sg(m)) + model.scale(second, &sg(n));
    let top = (m + n + 1) as usize;
    let weight = int(m + n + 2);
    let e_pos = model.euler(top, &one, &zero);
    let e_neg = model.euler(top, &minus, &zero);
    let tail = e_pos.clone() - model.var().pow_u(m + n + 1);
    let rhs = model.scale(tail.clone(), &(sg(m + 1) * int(2) * &weight));

    // the rewriting that turns the q = k = 1 case of the odd-k theorem into
    // the statement above
    let split = model.scale(e_pos.clone(), &(sg(m) * &weight)) + model.scale(e_neg.clone(), &(sg(n) * &weight));
    let grouped = model.scale(e_pos + model.scale(e_neg, &sg(m + n)), &(sg(m) * &weight));
    let closed = model.scale(tail, &(sg(m) * int(2) * &weight));
    Sides::one(lhs, rhs).and(split, grouped.clone()).and(grouped, closed)
}

fn thm1<M: Model>(model: &M, m: u32, n: u32, q: u32, k: u32) -> Sides<M::Value> {
    let (one, zero, minus) = (int(1), int(0), int(-1));
    let half = |top: u32, other: u32, u: &Rational| {
        (0..=top + q).fold(M::Value::zero(), |acc, i| {
            let r = other + q + i;
            if k > r {
                return acc;
            }
            let c = b(top + q, i as i64) * b(r, k as i64);
            acc + model.scale(model.euler((r - k) as usize, u, &zero), &c)
        })
    };
    let lhs = model.scale(half(m, n, &one), &sg(m)) + model.scale(half(n, m, &minus), &sg(n));
    Sides::one(lhs, M::Value::zero())
}

fn sun<M: Model>(model: &M, m: u32, n: u32, a: &Rational) -> Sides<M::Value> {
    let (one, zero, minus) = (int(1), int(0), int(-1));
    let c_shift = int(1) - a;
    let lhs = (0..=m).fold(M::Value::zero(), |acc, i| {
        let c = b(m, i as i64) * int_pow(a, m - i);
        acc + model.scale(model.euler((n + i) as usize, &one, &zero), &c)
    });
    let rhs = (0..=n).fold(M::Value::zero(), |acc, j| {
        let c = b(n, j as i64) * int_pow(a, n - j);
        acc + model.scale(model.euler((m + j) as usize, &minus, &c_shift), &c)
    });
    Sides::one(model.scale(lhs, &sg(m)), model.scale(rhs, &sg(n)))
}

/// `P_{m,n,s}(x; a)` as a polynomial in `x` over the model's values.
pub fn thm2_kernel<M: Model>(model: &M, m: u32, n: u32, s: u32) -> Poly<M::Value> {
    let a = model.var();
    let one = M::Value::one();
    let shift = M::Value::from_i64(s as i64 + 1);
    let lin = |v: M::Value| Poly::linear(one.clone(), v);
    let first = lin(a.clone()).pow(m + 1) * lin(a.clone() - shift.clone()).pow(n + 1);
    let second = lin(-a.clone()).pow(n + 1) * lin(-a - shift).pow(m + 1);
    let signed = if (m + n).is_multiple_of(2) { second } else { -second };
    first + signed
}

/// `(-1)^s - (-1)^k`
pub fn delta(s: u32, k: u32) -> i64 {
    sign(s as u64) - sign(k as u64)
}

fn thm2<M: Model>(model: &M, m: u32, n: u32, s: u32, k: u32) -> Sides<M::Value> {
    let (one, zero, minus) = (int(1), int(0), int(-1));
    let weight = int(s + 1);
    let half = |top: u32, other: u32, u: &Rational| {
        (0..=top + 1).fold(M::Value::zero(), |acc, i| {
            let r = other + i + 1;
            if k > r {
                return acc;
            }
            let c = int_pow(&weight, top + 1 - i) * b(top + 1, i as i64) * b(r, k as i64);
            acc + model.scale(model.euler((r - k) as usize, u, &zero), &c)
        })
    };
    let inner = half(m, n, &one) + model.scale(half(n, m, &minus), &sg(m + n));
    let lhs = model.scale(inner, &int(delta(s, k)));

    Sides::one(lhs, thm2_rhs(model, m, n, s, k))
}

/// `(2/k!) sum_{l=1}^{s} (-1)^l P^{(k)}_{m,n,s}(l; a)`
pub fn thm2_rhs<M: Model>(model: &M, m: u32, n: u32, s: u32, k: u32) -> M::Value {
    let derived = thm2_kernel(model, m, n, s).derivative_k(k as usize);
    let total = (1..=s).fold(M::Value::zero(), |acc, l| {
        let v = derived.eval(&M::Value::from_i64(l as i64));
        if l % 2 == 0 {
            acc + v
        } else {
            acc - v
        }
    });
    model.scale(total, &(int(2) / int(factorial(k as u64))))
}

fn thm3<M: Model>(model: &M, m: u32, k: u32) -> Sides<M::Value> {
    let (one, zero) = (int(1), int(0));
    let lhs = (0..=m).filter(|i| (m + i).is_multiple_of(2)).fold(M::Value::zero(), |acc, i| {
        let c = b(m, i as i64) * b(m + i, k as i64);
        acc + model.scale(model.euler((m + i - k) as usize, &one, &zero), &c)
    });
    let rhs = (0..=m).fold(M::Value::zero(), |acc, j| {
        let c = sg(m + j) * b(m, j as i64) * b(m + j, k as i64);
        acc + model.scale(model.var().pow_u(m + j - k), &c)
    });
    Sides::one(lhs, rhs)
}

fn thm3_1(cache: &EulerCache, part: u8, m: u32, k: u32, aux: u32) -> Sides<Rational> {
    let e0 = |r: u32| cache.euler_poly(r as usize).coeff(0);
    let even = |i: &u32| (m + i).is_multiple_of(2);
    let base = |i: u32| b(m, i as i64) * b(m + i, k as i64);
    match part {
        1 => {
            let lhs = (0..=m).filter(even).fold(Rational::zero(), |acc, i| {
                acc + base(i) * b(m + i - k, (m - k) as i64) * e0(i)
            });
            Sides::one(lhs, sg(m) * b(m, k as i64))
        }
        2 => {
            let lhs = (0..=m).filter(even).fold(Rational::zero(), |acc, i| {
                acc + base(i) * b(m + i - k, (m - k - 1) as i64) * e0(i + 1)
            });
            Sides::one(lhs, Rational::zero())
        }
        3 => {
            let l = aux;
            let lhs = (0..=m).filter(even).fold(Rational::zero(), |acc, i| {
                acc + base(i) * b(m + i - k, l as i64) * e0(m + i - k - l)
            });
            Sides::one(lhs, Rational::zero())
        }
        _ => {
            let j = aux;
            let lhs = (j..=m).filter(even).fold(Rational::zero(), |acc, i| {
                acc + base(i) * b(m + i - k, (m + j - k) as i64) * e0(i - j)
            });
            Sides::one(lhs, sg(m + j) * b(m, j as i64) * b(m + j, k as i64))
        }
    }
}

/// `sum_{j=0}^{n+1} C(n+1,j) (n+j+1) E_{n+j}(0)`
pub fn cro2_sum(cache: &EulerCache, n: u32) -> Rational {
    (0..=n + 1).fold(Rational::zero(), |acc, j| {
        acc + b(n + 1, j as i64) * int(n + j + 1) * cache.euler_poly((n + j) as usize).coeff(0)
    })
}

/// `E_{2n+1}(0)` from `-(1/(2(n+1))) sum_{j=0}^{n} C(n+1,j)(n+j+1) E_{n+j}(0)`.
pub fn euler_zero_via_recurrence(cache: &EulerCache, n: u32) -> Rational {
    recurrence_with(cache, n, |_| true)
}

/// The same recurrence keeping only the terms that can be nonzero: odd
/// indices `n+j`, plus `E_0(0) = 1` when `n = 0`.
pub fn euler_zero_via_recurrence_odd_terms(cache: &EulerCache, n: u32) -> Rational {
    recurrence_with(cache, n, |r| r % 2 == 1 || r == 0)
}

fn recurrence_with(cache: &EulerCache, n: u32, keep: impl Fn(u32) -> bool) -> Rational {
    let sum = (0..=n).filter(|j| keep(n + j)).fold(Rational::zero(), |acc, j| {
        acc + b(n + 1, j as i64) * int(n + j + 1) * cache.euler_poly((n + j) as usize).coeff(0)
    });
    -sum / int(2 * (n as i64 + 1))
}

fn thm2_cro1_sum(cache: &EulerCache, n: u32, k: u32) -> Rational {
    (0..=n + 1).fold(Rational::zero(), |acc, i| {
        let r = n + i + 1;
        if k > r {
            return acc;
        }
        let c = sg(i) / int_pow(&int(2), i) * int(bi(n + 1, i)) * int(bi(r, k));
        if k.is_multiple_of(2) {
            let e = cache.euler_poly((r - k) as usize).coeff(0);
            acc + c * (sg(i) * e + sg(n))
        } else {
            acc + c
        }
    })
}

fn thm2_cro2_sum(cache: &EulerCache, n: u32, k: u32) -> Rational {
    (0..=n + 1).fold(Rational::zero(), |acc, i| {
        let r = n + i + 1;
        if k > r {
            return acc;
        }
        let c = sg(i) * int_pow(&int(3), n + 1 - i) * int(bi(n + 1, i)) * int(bi(r, k));
        let pow2 = int_pow(&int(2), r - k) - int(1);
        if k % 2 == 1 {
            let e = cache.euler_poly((r - k) as usize).coeff(0);
            acc + c * (sg(i) * e + sg(n) * pow2)
        } else {
            acc + c * pow2
        }
    })
}

trait PowU {
    fn pow_u(self, e: u32) -> Self;
}

impl<C: Coeff> PowU for C {
    fn pow_u(self, e: u32) -> Self {
        num_traits::pow(self, e as usize)
    }
}
