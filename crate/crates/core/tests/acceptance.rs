//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every comparison is exact; the only numeric thresholds
//! are the wall-clock limits and the valuation lower bounds.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use euler_identities::cli;
use euler_identities::euler::{alt_power_sum, power_sum, EulerCache};
use euler_identities::identities::statement::{delta, thm2_rhs};
use euler_identities::identities::{check_with, lem1_poly, CheckError, IdentityReport, Residual, Statement, Symbolic};
use euler_identities::numeric::{int, rat, Rational};
use euler_identities::padic::{
    fermionic_sum_closed, fermionic_sum_naive, is_p_integral, lem1_defect, shifted_power, witt_defect,
    PadicError, PadicInt, DEFAULT_BUDGET,
};
use euler_identities::poly::Poly;
use euler_identities::series;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&EulerCache) -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_all(cache: &EulerCache, stmts: &[Statement]) -> Result<Vec<IdentityReport>, String> {
    use rayon::prelude::*;
    stmts
        .par_iter()
        .map(|s| check_with(s, cache, false).map_err(|e| format!("{s:?}: {e}")))
        .collect()
}

fn first_failure(reports: &[IdentityReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.pass) {
        Some(r) => Err(format!("{} {} residual {}", r.id, r.params_text(), r.residual)),
        None => Ok(()),
    }
}

fn value_table(cache: &EulerCache) -> Outcome {
    let expected: [&[Rational]; 4] = [
        &[int(1)],
        &[rat(-1, 2), int(1)],
        &[int(0), int(-1), int(1)],
        &[rat(1, 4), int(0), rat(-3, 2), int(1)],
    ];
    for (n, coeffs) in expected.iter().enumerate() {
        let got = cache.euler_poly(n);
        ensure(*got == Poly::new(coeffs.to_vec()), || format!("E_{n}(a) = {got}"))?;
    }
    let oracle = series::euler_numbers(11);
    let listed: Vec<Rational> = [1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521].iter().map(|&v| int(v)).collect();
    ensure(oracle == listed, || format!("series oracle gives {oracle:?}"))?;
    for (n, want) in oracle.iter().enumerate() {
        let got = cache.euler_number(n);
        ensure(got == *want, || format!("E_{n} = {got}, oracle {want}"))?;
        if n % 2 == 1 {
            ensure(got.is_zero(), || format!("E_{n} = {got} is not zero"))?;
        }
    }
    Ok("E_0..E_3(a) and E_0..E_10 exact".into())
}

fn classical_formulas(cache: &EulerCache) -> Outcome {
    let mut bad = Vec::new();
    for m in 1..=50u64 {
        for n in 0..=10usize {
            if alt_power_sum(m, n) != cache.alt_power_sum_closed(m, n) {
                bad.push(format!("alternating m={m} n={n}"));
            }
            if power_sum(m, n) != cache.power_sum_closed(m, n) {
                bad.push(format!("Bernoulli m={m} n={n}"));
            }
        }
    }
    if bad.is_empty() {
        Ok("1 <= m <= 50, 0 <= n <= 10".into())
    } else {
        let at_zero = bad.iter().all(|b| b.ends_with(" n=0"));
        Err(format!(
            "{} mismatches{}; first: {}",
            bad.len(),
            if at_zero { ", all at n = 0 (closed forms count the 0^0 term)" } else { "" },
            bad[0]
        ))
    }
}

fn identity_suite(cache: &EulerCache) -> Outcome {
    use Statement::*;
    let mut stmts = Vec::new();
    for m in 0..=8 {
        for n in 0..=8 {
            stmts.push(Wsp7 { m, n });
            stmts.push(Wsp9 { m, n });
            for a in [int(0), int(1), rat(1, 2), int(-1)] {
                stmts.push(Sun { m, n, a });
            }
        }
    }
    for m in 0..=6 {
        for n in 0..=6 {
            for q in 1..=4 {
                for k in [1, 3, 5] {
                    if m + n > 0 {
                        stmts.push(Thm1 { m, n, q, k });
                    }
                }
            }
        }
    }
    for n in 0..=10 {
        for q in [1, 3, 5] {
            stmts.push(Cro0 { n, q });
        }
    }
    for m in 0..=12 {
        for n in 0..=12 {
            if m + n > 0 {
                stmts.push(Cro1 { m, n });
            }
        }
    }
    for n in 0..=20 {
        stmts.push(Cro2 { n });
        stmts.push(RecurrenceOdd { n });
    }
    for m in 0..=10 {
        for n in 0..=10 {
            stmts.push(SunCor { m, n });
        }
    }
    for m in 0..=5 {
        for n in 0..=5 {
            for s in 1..=4 {
                for k in 0..=4 {
                    if m + n > 0 {
                        stmts.push(Thm2 { m, n, s, k });
                    }
                }
            }
        }
    }
    for n in 0..=8 {
        for k in 0..=6 {
            stmts.push(Thm2Cro1 { n, k });
            stmts.push(Thm2Cro2 { n, k });
        }
    }
    for m in 0..=10 {
        for k in 0..=m {
            stmts.push(Thm3 { m, k });
            stmts.push(Thm3_1 { part: 1, m, k, aux: 0 });
            if k < m {
                stmts.push(Thm3_1 { part: 2, m, k, aux: 0 });
            }
            for l in 0..m.saturating_sub(k) {
                stmts.push(Thm3_1 { part: 3, m, k, aux: l });
            }
            for j in 1..=m {
                stmts.push(Thm3_1 { part: 4, m, k, aux: j });
            }
        }
    }
    for m in 3..=15 {
        stmts.push(Rem2_1 { m });
    }
    let reports = run_all(cache, &stmts)?;
    first_failure(&reports)?;
    let symbolic = Symbolic { cache };
    let mut delta_zero = 0;
    for m in 0..=5 {
        for n in 0..=5 {
            for s in 1..=4 {
                for k in 0..=4 {
                    if m + n > 0 && delta(s, k) == 0 {
                        ensure(thm2_rhs(&symbolic, m, n, s, k).is_zero(), || {
                            format!("thm2 right side nonzero at m={m} n={n} s={s} k={k}")
                        })?;
                        delta_zero += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{} statements, every residual exactly zero; {delta_zero} right sides vanish where delta = 0", reports.len()))
}

fn cross_links(cache: &EulerCache) -> Outcome {
    use Statement::*;
    let get = |s: Statement| check_with(&s, cache, false).map_err(|e| e.to_string());
    let mut count = 0;
    for m in 0..=8 {
        for n in 0..=8 {
            if m + n > 0 {
                let a = get(Thm1 { m, n, q: 1, k: 1 })?;
                let b = get(Wsp9 { m, n })?;
                ensure(a.residual == b.residual, || format!("thm1/wsp9 differ at m={m} n={n}"))?;
                count += 1;
            }
            let a = get(Sun { m, n, a: int(1) })?;
            let b = get(Wsp7 { m, n })?;
            ensure(a.residual == b.residual, || format!("sun/wsp7 differ at m={m} n={n}"))?;
            count += 1;
        }
    }
    for n in 1..=20 {
        let a = get(Thm3_1 { part: 3, m: n + 1, k: 0, aux: 1 })?;
        let b = get(Cro2 { n })?;
        ensure(a.pass == b.pass, || format!("thm3_1c/cro2 verdicts differ at n={n}"))?;
        count += 1;
    }
    let zero_poly = Residual::Poly(Poly::zero());
    ensure(get(Wsp9 { m: 2, n: 3 })?.residual == zero_poly, || "wsp9 residual is not the zero polynomial".into())?;
    Ok(format!("{count} specializations identical"))
}

fn padic_convergence(cache: &EulerCache) -> Outcome {
    use rayon::prelude::*;
    let points = [int(0), int(1), rat(1, 2), rat(-2, 3)];
    let mut cases = Vec::new();
    for p in [3u64, 5, 7] {
        for precision in 1..=5u32 {
            for n in 0..=8usize {
                for a in points.iter().filter(|a| is_p_integral(a, p)) {
                    cases.push((p, precision, n, a.clone()));
                }
            }
        }
    }
    let naive_runs: usize = cases
        .par_iter()
        .map(|(p, precision, n, a)| -> Result<usize, String> {
            let tag = || format!("p={p} N={precision} n={n} a={a}");
            let d = witt_defect(cache, *n, a, *p, *precision).map_err(|e| format!("{}: {e}", tag()))?;
            ensure(d.at_least(*precision), || format!("{}: defect {d}", tag()))?;
            match fermionic_sum_naive(shifted_power(a, *n), *p, *precision, DEFAULT_BUDGET) {
                Ok(s) => {
                    let q = BigInt::from(*p).pow(*precision);
                    ensure(s == fermionic_sum_closed(cache, *n, a, &q), || format!("{}: naive != closed", tag()))?;
                    Ok(1)
                }
                Err(PadicError::BudgetExceeded { .. }) => Ok(0),
                Err(e) => Err(format!("{}: {e}", tag())),
            }
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    let lem1_cases: Vec<(u64, u32)> = [3u64, 5, 7].iter().flat_map(|&p| (0..50).map(move |s| (p, s))).collect();
    lem1_cases.par_iter().try_for_each(|&(p, sample)| -> Result<(), String> {
        let f = lem1_poly(p, sample, 0);
        for precision in 1..=5 {
            let d = lem1_defect(&f, p, precision, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(d.min().at_least(precision), || format!("lem1 p={p} N={precision} f={f}: {:?}", d))?;
        }
        Ok(())
    })?;
    Ok(format!("{} Witt cases ({naive_runs} with naive sums), {} lemma polynomials", cases.len(), lem1_cases.len()))
}

fn error_paths(cache: &EulerCache) -> Outcome {
    ensure(PadicInt::new(1, 2, 3) == Err(PadicError::EvenPrime), || "PadicInt accepted p = 2".into())?;
    ensure(witt_defect(cache, 1, &int(0), 2, 2) == Err(PadicError::EvenPrime), || "witt accepted p = 2".into())?;
    for precision in 1..=5 {
        let r = PadicInt::from_rational(&rat(1, 3), 3, precision);
        ensure(matches!(r, Err(PadicError::DenominatorNotInvertible { .. })), || format!("1/3 embedded in Z_3: {r:?}"))?;
    }
    let failing = check_with(&Statement::EulerAltSum { m: 1, n: 0 }, cache, false).map_err(|e| e.to_string())?;
    ensure(cli::exit_code(&[failing]) == 1, || "failing report did not map to exit 1".into())?;
    ensure(
        matches!(check_with(&Statement::Thm1 { m: 1, n: 1, q: 1, k: 2 }, cache, false), Err(CheckError::EvenK(2))),
        || "even k accepted".into(),
    )?;
    let bin = env!("CARGO_BIN_EXE_euler-identities");
    let status = |args: &[&str]| Command::new(bin).args(args).output().map(|o| o.status.code());
    for (args, want) in [
        (&["verify", "cro2", "--n", "0..20"][..], 0),
        (&["verify", "nosuch"][..], 2),
        (&["verify", "wsp7", "--m", "0..x"][..], 2),
        (&["witt", "--p", "2", "--precision", "2"][..], 2),
        (&["witt", "--p", "3", "--a", "1/3"][..], 2),
    ] {
        let got = status(args).map_err(|e| e.to_string())?;
        ensure(got == Some(want), || format!("{args:?} exited {got:?}, want {want}"))?;
    }
    Ok("p = 2, 1/3 in Z_3, exit codes 0/1/2".into())
}

fn main() -> ExitCode {
    let cache = EulerCache::global();
    let criteria: [Criterion; 6] = [
        ("1 value table", value_table, Duration::from_secs(1)),
        ("2 classical power-sum formulas", classical_formulas, Duration::from_secs(5)),
        ("3 identity suite", identity_suite, Duration::from_secs(60)),
        ("4 specialization cross-links", cross_links, Duration::from_secs(60)),
        ("5 p-adic convergence", padic_convergence, Duration::from_secs(120)),
        ("6 error paths", error_paths, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run(cache);
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= limit {
                Ok(msg)
            } else {
                Err(format!("took {:.2} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs()))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({:.2} s)", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} ({:.2} s)", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
