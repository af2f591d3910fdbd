//! Parameter grids and parallel suite runs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{check_with, CheckError, CheckerId, IdentityReport, Statement};
use crate::euler::EulerCache;
use crate::numeric::{int, rat, Rational};
use crate::padic::{is_p_integral, DEFAULT_BUDGET};

/// Inclusive integer interval `lo..hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: u32,
    pub hi: u32,
}

impl Span {
    pub const fn new(lo: u32, hi: u32) -> Self {
        Span { lo, hi }
    }

    pub fn iter(self) -> impl Iterator<Item = u32> + Clone {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, CheckError> {
        let bad = || CheckError::Usage(format!("malformed range '{s}', expected lo..hi or a single value"));
        let parse = |t: &str| -> Result<u32, CheckError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        let span = match s.split_once("..") {
            Some((lo, hi)) => Span::new(parse(lo)?, parse(hi)?),
            None => {
                let v = parse(s)?;
                Span::new(v, v)
            }
        };
        if span.lo > span.hi {
            return Err(CheckError::Usage(format!("empty range '{s}'")));
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Parameter ranges for a suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub m: Span,
    pub n: Span,
    pub q: Span,
    pub k: Span,
    pub s: Span,
    pub points: Vec<Rational>,
    pub primes: Vec<u64>,
    pub precision: Span,
    pub budget: u64,
    pub lem1_samples: u32,
    pub seed: u64,
    pub naive: bool,
    pub pointwise: bool,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            m: Span::new(0, 6),
            n: Span::new(0, 6),
            q: Span::new(1, 3),
            k: Span::new(1, 3),
            s: Span::new(1, 3),
            points: vec![int(0), int(1), rat(1, 2), int(-1), rat(-2, 3)],
            primes: vec![3, 5, 7],
            precision: Span::new(1, 3),
            budget: DEFAULT_BUDGET,
            lem1_samples: 5,
            seed: 0,
            naive: true,
            pointwise: false,
        }
    }
}

impl Grid {
    /// Every statement of checker `id` inside the grid.
    pub fn statements(&self, id: CheckerId) -> Vec<Statement> {
        use CheckerId as C;
        let (ms, ns, qs, ks, ss) = (self.m.iter(), self.n.iter(), self.q.iter(), self.k.iter(), self.s.iter());
        let pairs = || ms.clone().flat_map(|m| ns.clone().map(move |n| (m, n)));
        match id {
            C::Reflection => ns.map(|n| Statement::Reflection { n }).collect(),
            C::Complement => ns.map(|n| Statement::Complement { n }).collect(),
            C::Boundary => ns.map(|n| Statement::Boundary { n }).collect(),
            C::GfConsistency => ns.map(|n| Statement::GfConsistency { n }).collect(),
            C::FerSim => ns.map(|n| Statement::FerSim { n }).collect(),
            C::RecurrenceOdd => ns.map(|n| Statement::RecurrenceOdd { n }).collect(),
            C::Cro2 => ns.map(|n| Statement::Cro2 { n }).collect(),
            C::FerSim3 => ns.flat_map(|n| qs.clone().filter(|&q| q >= 1).map(move |q| Statement::FerSim3 { n, q })).collect(),
            C::EulerAltSum => pairs()
                .filter(|&(m, n)| m >= 1 && n >= 1)
                .map(|(m, n)| Statement::EulerAltSum { m, n })
                .collect(),
            C::BernoulliPowerSum => pairs()
                .filter(|&(m, n)| m >= 1 && n >= 1)
                .map(|(m, n)| Statement::BernoulliPowerSum { m, n })
                .collect(),
            C::Wsp7 => pairs().map(|(m, n)| Statement::Wsp7 { m, n }).collect(),
            C::Wsp9 => pairs().map(|(m, n)| Statement::Wsp9 { m, n }).collect(),
            C::Cro1 => pairs().filter(|&(m, n)| m + n > 0).map(|(m, n)| Statement::Cro1 { m, n }).collect(),
            C::SunCor => pairs().map(|(m, n)| Statement::SunCor { m, n }).collect(),
            C::Thm1 => pairs()
                .filter(|&(m, n)| m + n > 0)
                .flat_map(|(m, n)| {
                    let ks = ks.clone();
                    qs.clone()
                        .filter(|&q| q >= 1)
                        .flat_map(move |q| ks.clone().filter(|k| k % 2 == 1).map(move |k| Statement::Thm1 { m, n, q, k }))
                })
                .collect(),
            C::Cro0 => ns
                .flat_map(|n| qs.clone().filter(|q| q % 2 == 1).map(move |q| Statement::Cro0 { n, q }))
                .collect(),
            C::Sun => pairs()
                .flat_map(|(m, n)| self.points.iter().map(move |a| Statement::Sun { m, n, a: a.clone() }))
                .collect(),
            C::Thm2 => pairs()
                .filter(|&(m, n)| m + n > 0)
                .flat_map(|(m, n)| {
                    let ks = ks.clone();
                    ss.clone()
                        .filter(|&s| s >= 1)
                        .flat_map(move |s| ks.clone().map(move |k| Statement::Thm2 { m, n, s, k }))
                })
                .collect(),
            C::Thm2Cro1 => ns.flat_map(|n| ks.clone().map(move |k| Statement::Thm2Cro1 { n, k })).collect(),
            C::Thm2Cro2 => ns.flat_map(|n| ks.clone().map(move |k| Statement::Thm2Cro2 { n, k })).collect(),
            C::Thm3 => ms.flat_map(|m| (0..=m).map(move |k| Statement::Thm3 { m, k })).collect(),
            C::Thm3_1a => ms.flat_map(|m| (0..=m).map(move |k| Statement::Thm3_1 { part: 1, m, k, aux: 0 })).collect(),
            C::Thm3_1b => ms.flat_map(|m| (0..m).map(move |k| Statement::Thm3_1 { part: 2, m, k, aux: 0 })).collect(),
            C::Thm3_1c => ms
                .flat_map(|m| (0..m).flat_map(move |k| (0..m - k).map(move |l| Statement::Thm3_1 { part: 3, m, k, aux: l })))
                .collect(),
            C::Thm3_1d => ms
                .flat_map(|m| (0..=m).flat_map(move |k| (1..=m).map(move |j| Statement::Thm3_1 { part: 4, m, k, aux: j })))
                .collect(),
            C::Rem2_1 => ms.filter(|&m| m >= 3).map(|m| Statement::Rem2_1 { m }).collect(),
            C::Witt => {
                let mut out = Vec::new();
                for &p in &self.primes {
                    for precision in self.precision.iter().filter(|&prec| prec >= 1) {
                        for n in self.n.iter() {
                            for a in self.points.iter().filter(|a| is_p_integral(a, p)) {
                                out.push(Statement::Witt {
                                    n,
                                    a: a.clone(),
                                    p,
                                    precision,
                                    naive: self.naive,
                                    budget: self.budget,
                                });
                            }
                        }
                    }
                }
                out
            }
            C::Lem1 => {
                let mut out = Vec::new();
                for &p in &self.primes {
                    for precision in self.precision.iter().filter(|&prec| prec >= 1) {
                        for sample in 0..self.lem1_samples {
                            out.push(Statement::Lem1 { p, precision, sample, seed: self.seed, budget: self.budget });
                        }
                    }
                }
                out
            }
        }
    }
}

/// Runs every statement of `ids` in the grid, in parallel. Reports come back
/// sorted by checker id, then parameters.
pub fn run_suite(ids: &[CheckerId], grid: &Grid, cache: &EulerCache) -> Result<Vec<IdentityReport>, CheckError> {
    let statements: Vec<Statement> = ids.iter().flat_map(|&id| grid.statements(id)).collect();
    let mut reports = statements
        .par_iter()
        .map(|stmt| check_with(stmt, cache, grid.pointwise))
        .collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.params.cmp(&b.params)));
    Ok(reports)
}

/// Parses a comma-separated list of ids; `all` selects every checker.
pub fn parse_ids(items: &[String]) -> Result<Vec<CheckerId>, CheckError> {
    let mut out = Vec::new();
    for item in items.iter().flat_map(|s| s.split(',')).map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            out.extend_from_slice(CheckerId::ALL);
        } else {
            out.push(item.parse()?);
        }
    }
    if out.is_empty() {
        out.extend_from_slice(CheckerId::ALL);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_grammar() {
        assert_eq!("0..6".parse::<Span>().unwrap(), Span::new(0, 6));
        assert_eq!("4".parse::<Span>().unwrap(), Span::new(4, 4));
        for bad in ["", "..", "1..", "-1..2", "3..1", "a..b", "1...2", " 1..2"] {
            assert!(bad.parse::<Span>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn ids_parse_and_dedup() {
        let ids = parse_ids(&["wsp7,cro2".into(), "wsp7".into()]).unwrap();
        assert_eq!(ids, vec![CheckerId::Wsp7, CheckerId::Cro2]);
        assert_eq!(parse_ids(&["all".into()]).unwrap().len(), CheckerId::ALL.len());
        assert!(matches!(parse_ids(&["nosuch".into()]), Err(CheckError::UnknownId(_))));
    }

    #[test]
    fn enumeration_respects_ranges() {
        let g = Grid::default();
        assert!(g.statements(CheckerId::Thm1).iter().all(|s| matches!(s, Statement::Thm1 { k, m, n, .. } if k % 2 == 1 && m + n > 0)));
        assert!(g.statements(CheckerId::Cro0).iter().all(|s| matches!(s, Statement::Cro0 { q, .. } if q % 2 == 1)));
        assert!(g.statements(CheckerId::Rem2_1).iter().all(|s| matches!(s, Statement::Rem2_1 { m } if *m >= 3)));
        let witt = g.statements(CheckerId::Witt);
        assert!(!witt.iter().any(|s| matches!(s, Statement::Witt { p: 3, a, .. } if *a == rat(-2, 3))));
        assert!(witt.iter().any(|s| matches!(s, Statement::Witt { p: 5, a, .. } if *a == rat(-2, 3))));
        for id in CheckerId::ALL {
            for s in g.statements(*id) {
                assert_eq!(s.id(), *id);
                s.validate().unwrap_or_else(|e| panic!("{s:?}: {e}"));
            }
        }
    }

    #[test]
    fn ordering_is_canonical() {
        let cache = EulerCache::new();
        let g = Grid { m: Span::new(0, 3), n: Span::new(0, 3), ..Grid::default() };
        let ids = [CheckerId::Cro1, CheckerId::Wsp7];
        let a = run_suite(&ids, &g, &cache).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| run_suite(&ids, &g, &cache)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.first().unwrap().id, CheckerId::Wsp7);
    }
}
