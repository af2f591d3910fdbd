//! Mechanical verification of Euler polynomial identities.
//!
//! Each statement is built on both sides as an exact object: a polynomial in
//! the free variable when the identity holds for every argument, a rational
//! when it is a numeric identity, and a p-adic valuation when it describes a
//! limit. Polynomial identities over the rationals hold in every commutative
//! ring containing them, so a zero residual certifies the identity for any
//! argument, p-adic or otherwise.

pub mod model;
pub mod report;
pub mod statement;
pub mod suite;

use std::fmt;
use std::time::Instant;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::euler::EulerCache;
use crate::numeric::{format_rational, Rational};
use crate::padic::{
    ensure_odd_prime, fermionic_sum_closed, fermionic_sum_naive, lem1_defect, random_p_integral_poly,
    shifted_power, witt_defect, PadicError, Valuation,
};
use crate::poly::Poly;

pub use model::{sample_points, AtPoint, Model, Symbolic};
pub use statement::{CheckerId, Statement};
pub use suite::{run_suite, Grid, Span};

/// Degree bound for the random polynomials fed to the lemma on shifted and
/// reflected integrands.
pub const LEM1_MAX_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unknown checker id '{0}'")]
    UnknownId(String),
    #[error("k must be odd, got {0}")]
    EvenK(u32),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Symbolic,
    Pointwise,
    Valuation,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Pointwise => "pointwise",
            Mode::Valuation => "valuation",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named parameter value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Param {
    Int(i64),
    Rat(Rational),
    Text(String),
    /// Coefficients, lowest degree first.
    Poly(Vec<Rational>),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Rat(r) => f.write_str(&format_rational(r)),
            Param::Text(t) => f.write_str(t),
            Param::Poly(c) => f.write_str(&Poly::new(c.clone()).to_human("x")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Residual {
    Poly(Poly<Rational>),
    Rational(Rational),
    /// Valuation of the truncation error.
    Defect(Valuation),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Poly(p) => f.write_str(&p.to_human("a")),
            Residual::Rational(r) => f.write_str(&format_rational(r)),
            Residual::Defect(v) => write!(f, "{v}"),
        }
    }
}

/// Outcome of one check.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub id: CheckerId,
    pub params: Vec<(String, Param)>,
    pub mode: Mode,
    pub residual: Residual,
    pub pass: bool,
    pub elapsed_ms: f64,
}

impl PartialEq for IdentityReport {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
            && self.params == other.params
            && self.mode == other.mode
            && self.residual == other.residual
            && self.pass == other.pass
    }
}

impl IdentityReport {
    pub fn param(&self, name: &str) -> Option<&Param> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Runs one statement. `pointwise` replaces the symbolic residual of a
/// polynomial identity by evaluation at `degree + 1` sample points.
pub fn check_with(stmt: &Statement, cache: &EulerCache, pointwise: bool) -> Result<IdentityReport, CheckError> {
    stmt.validate()?;
    let start = Instant::now();
    let mut params: Vec<(String, Param)> = stmt.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    let (mode, residual, pass) = match stmt {
        Statement::Witt { n, a, p, precision, naive, budget } => {
            let defect = witt_defect(cache, *n as usize, a, *p, *precision)?;
            let naive_state = if !*naive {
                "off"
            } else {
                match fermionic_sum_naive(shifted_power(a, *n as usize), *p, *precision, *budget) {
                    Ok(s) => {
                        let q = num_bigint::BigInt::from(*p).pow(*precision);
                        if s == fermionic_sum_closed(cache, *n as usize, a, &q) {
                            "agree"
                        } else {
                            "disagree"
                        }
                    }
                    Err(PadicError::BudgetExceeded { .. }) => "skipped",
                    Err(e) => return Err(e.into()),
                }
            };
            params.push(("naive".into(), Param::Text(naive_state.into())));
            let pass = defect.at_least(*precision) && naive_state != "disagree";
            (Mode::Valuation, Residual::Defect(defect), pass)
        }
        Statement::Lem1 { p, precision, sample, seed, budget } => {
            ensure_odd_prime(*p)?;
            let f = lem1_poly(*p, *sample, *seed);
            let defects = lem1_defect(&f, *p, *precision, *budget)?;
            params.push(("f".into(), Param::Poly(f.into_coeffs())));
            let d = defects.min();
            (Mode::Valuation, Residual::Defect(d), d.at_least(*precision))
        }
        _ if stmt.is_symbolic() && pointwise => {
            let points = sample_points(stmt.degree_bound().expect("symbolic") + 1);
            let residual = points
                .into_iter()
                .map(|t| {
                    let model = AtPoint { cache, t };
                    stmt.sides(&model).expect("symbolic").residual()
                })
                .find(|r| !r.is_zero())
                .unwrap_or_else(Rational::zero);
            let pass = residual.is_zero();
            (Mode::Pointwise, Residual::Rational(residual), pass)
        }
        _ if stmt.is_symbolic() => {
            let residual = stmt.sides(&Symbolic { cache }).expect("symbolic").residual();
            let pass = residual.is_zero();
            (Mode::Symbolic, Residual::Poly(residual), pass)
        }
        _ => {
            let residual = stmt.numeric_sides(cache).expect("numeric statement").residual();
            let pass = residual.is_zero();
            (Mode::Pointwise, Residual::Rational(residual), pass)
        }
    };
    Ok(IdentityReport {
        id: stmt.id(),
        params,
        mode,
        residual,
        pass,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// [`check_with`] on the process-wide cache, symbolic where possible.
pub fn check(stmt: &Statement) -> Result<IdentityReport, CheckError> {
    check_with(stmt, EulerCache::global(), false)
}

/// The random integrand used by lemma sample `sample` at prime `p`.
pub fn lem1_poly(p: u64, sample: u32, seed: u64) -> Poly<Rational> {
    let stream = seed ^ (p << 32) ^ sample as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    random_p_integral_poly(&mut rng, p, LEM1_MAX_DEGREE)
}

pub fn check_wsp7(m: u32, n: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Wsp7 { m, n })
}

pub fn check_wsp9(m: u32, n: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Wsp9 { m, n })
}

pub fn check_thm1(m: u32, n: u32, q: u32, k: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Thm1 { m, n, q, k })
}

pub fn check_cro0(n: u32, q: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Cro0 { n, q })
}

pub fn check_cro1(m: u32, n: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Cro1 { m, n })
}

pub fn check_cro2(n: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Cro2 { n })
}

pub fn check_recurrence_odd(n: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::RecurrenceOdd { n })
}

/// Symbolic in `b`, with `c = 1 - a - b`.
pub fn check_sun_symbolic(m: u32, n: u32, a: Rational) -> Result<IdentityReport, CheckError> {
    check(&Statement::Sun { m, n, a })
}

/// At the point `(a, b)`, with `c = 1 - a - b`.
pub fn check_sun(m: u32, n: u32, a: Rational, b: Rational) -> Result<IdentityReport, CheckError> {
    let stmt = Statement::Sun { m, n, a };
    let start = Instant::now();
    let cache = EulerCache::global();
    let residual = stmt.sides(&AtPoint { cache, t: b.clone() }).expect("symbolic").residual();
    let mut params: Vec<(String, Param)> = stmt.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    params.push(("b".into(), Param::Rat(b)));
    Ok(IdentityReport {
        id: CheckerId::Sun,
        params,
        mode: Mode::Pointwise,
        pass: residual.is_zero(),
        residual: Residual::Rational(residual),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn check_sun_cor(m: u32, n: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::SunCor { m, n })
}

pub fn check_thm2(m: u32, n: u32, s: u32, k: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Thm2 { m, n, s, k })
}

pub fn check_thm2_cro1(n: u32, k: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Thm2Cro1 { n, k })
}

pub fn check_thm2_cro2(n: u32, k: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Thm2Cro2 { n, k })
}

pub fn check_thm3(m: u32, k: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Thm3 { m, k })
}

pub fn check_thm3_1(part: u8, m: u32, k: u32, aux: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Thm3_1 { part, m, k, aux })
}

pub fn check_rem2_1(m: u32) -> Result<IdentityReport, CheckError> {
    check(&Statement::Rem2_1 { m })
}

pub fn check_witt(n: u32, a: Rational, p: u64, precision: u32, naive: bool, budget: u64) -> Result<IdentityReport, CheckError> {
    check(&Statement::Witt { n, a, p, precision, naive, budget })
}

pub fn check_lem1(p: u64, precision: u32, sample: u32, seed: u64, budget: u64) -> Result<IdentityReport, CheckError> {
    check(&Statement::Lem1 { p, precision, sample, seed, budget })
}
