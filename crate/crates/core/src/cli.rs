//! The `euler-identities` command line.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 for
//! usage and parse errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::json;

use crate::euler::EulerCache;
use crate::identities::report::{self, Format};
use crate::identities::suite::parse_ids;
use crate::identities::{run_suite, CheckError, Grid, IdentityReport, Span};
use crate::numeric::{format_rational, parse_rational, Rational};
use crate::padic::{
    ensure_odd_prime, fermionic_sum_closed, fermionic_sum_naive, shifted_power, witt_defect, DEFAULT_BUDGET,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "euler-identities", version, about = "Exact Euler polynomials, fermionic p-adic sums and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Euler polynomial E_n(x).
    Poly {
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate E_n(a) at a rational point.
    Eval {
        n: u32,
        #[arg(allow_hyphen_values = true, value_parser = rational)]
        a: Rational,
    },
    /// Print the Euler numbers E_0..E_max.
    Numbers {
        max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run identity checks over a parameter grid.
    Verify(VerifyArgs),
    /// Compare the truncated fermionic sum of (x+a)^n with E_n(a).
    Witt(WittArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Checker ids, comma or space separated, or `all`.
    pub ids: Vec<String>,
    #[arg(long, value_parser = span, default_value = "0..6")]
    pub m: Span,
    #[arg(long, value_parser = span, default_value = "0..6")]
    pub n: Span,
    #[arg(long, value_parser = span, default_value = "1..3")]
    pub q: Span,
    #[arg(long, value_parser = span, default_value = "1..3")]
    pub k: Span,
    #[arg(long, value_parser = span, default_value = "1..3")]
    pub s: Span,
    /// Comma-separated rationals used as `a` (and as the shift in p-adic checks).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = rational, default_value = "0,1,1/2,-1,-2/3")]
    pub points: Vec<Rational>,
    /// Comma-separated odd primes.
    #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
    pub p: Vec<u64>,
    #[arg(long, value_parser = span, default_value = "1..3")]
    pub precision: Span,
    /// Largest p^N attempted by a naive p^N-term sum.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Random polynomials per (p, N) for the shifted/reflected integrand lemma.
    #[arg(long, default_value_t = 5)]
    pub lem1_samples: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip the naive p^N-term sums.
    #[arg(long)]
    pub no_naive: bool,
    /// Certify polynomial identities by evaluation at sample points.
    #[arg(long)]
    pub pointwise: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct WittArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub precision: u32,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long, allow_hyphen_values = true, value_parser = rational, default_value = "0")]
    pub a: Rational,
    /// Also run the p^N-term sum and require it to equal the closed form.
    #[arg(long)]
    pub naive: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn span(s: &str) -> Result<Span, String> {
    s.parse().map_err(|e: CheckError| e.to_string())
}

/// Runs the command line against the given writers and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let cache = EulerCache::global();
    let result = match cli.command {
        Command::Poly { n, format } => poly(cache, n, format, out),
        Command::Eval { n, a } => writeln!(out, "{}", format_rational(&cache.euler_at(n as usize, &a)))
            .map(|_| EXIT_PASS)
            .map_err(io_error),
        Command::Numbers { max, format } => numbers(cache, max, format, out),
        Command::Verify(args) => verify(cache, args, out, err),
        Command::Witt(args) => witt(cache, args, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn io_error(e: std::io::Error) -> String {
    e.to_string()
}

fn poly(cache: &EulerCache, n: u32, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let p = cache.euler_poly(n as usize);
    let text = match format {
        Format::Text => p.to_human("x") + "\n",
        Format::Json => p.to_json() + "\n",
        Format::Csv => {
            let rows: String = p
                .to_coeff_strings()
                .into_iter()
                .enumerate()
                .map(|(i, c)| format!("{i},{c}\n"))
                .collect();
            format!("degree,coefficient\n{rows}")
        }
        Format::Md => {
            let rows: String = p
                .to_coeff_strings()
                .into_iter()
                .enumerate()
                .map(|(i, c)| format!("| {i} | {c} |\n"))
                .collect();
            format!("| degree | coefficient |\n|---|---|\n{rows}")
        }
    };
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(EXIT_PASS)
}

fn numbers(cache: &EulerCache, max: u32, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let values: Vec<String> = (0..=max as usize).map(|n| format_rational(&cache.euler_number(n))).collect();
    let text = match format {
        Format::Text => values.join(", ") + "\n",
        Format::Json => serde_json::to_string(&values).expect("strings serialize") + "\n",
        Format::Csv => {
            let rows: String = values.iter().enumerate().map(|(n, v)| format!("{n},{v}\n")).collect();
            format!("n,E_n\n{rows}")
        }
        Format::Md => {
            let rows: String = values.iter().enumerate().map(|(n, v)| format!("| {n} | {v} |\n")).collect();
            format!("| n | E_n |\n|---|---|\n{rows}")
        }
    };
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(EXIT_PASS)
}

fn verify(cache: &EulerCache, args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let ids = parse_ids(&args.ids).map_err(|e| e.to_string())?;
    for &p in &args.p {
        ensure_odd_prime(p).map_err(|e| e.to_string())?;
    }
    let grid = Grid {
        m: args.m,
        n: args.n,
        q: args.q,
        k: args.k,
        s: args.s,
        points: args.points,
        primes: args.p,
        precision: args.precision,
        budget: args.budget,
        lem1_samples: args.lem1_samples,
        seed: args.seed,
        naive: !args.no_naive,
        pointwise: args.pointwise,
    };
    let reports = run_suite(&ids, &grid, cache).map_err(|e| e.to_string())?;
    let summary = report::summary(&reports);
    out.write_all(report::render(&reports, args.format).as_bytes()).map_err(io_error)?;
    if args.format == Format::Json {
        writeln!(err, "{summary}").map_err(io_error)?;
    } else {
        writeln!(out, "{summary}").map_err(io_error)?;
    }
    Ok(exit_code(&reports))
}

/// Exit code for a finished suite.
pub fn exit_code(reports: &[IdentityReport]) -> i32 {
    if report::all_pass(reports) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn witt(cache: &EulerCache, args: WittArgs, out: &mut dyn Write) -> Result<i32, String> {
    let WittArgs { p, precision, n, a, naive, budget, format } = args;
    let defect = witt_defect(cache, n as usize, &a, p, precision).map_err(|e| e.to_string())?;
    let q = BigInt::from(p).pow(precision);
    let closed = fermionic_sum_closed(cache, n as usize, &a, &q);
    let naive_sum = if naive {
        Some(fermionic_sum_naive(shifted_power(&a, n as usize), p, precision, budget).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let e_n = cache.euler_at(n as usize, &a);
    let agree = naive_sum.as_ref().is_none_or(|s| *s == closed);
    let pass = defect.at_least(precision) && agree;
    let verdict = if pass { "PASS" } else { "FAIL" };
    let text = match format {
        Format::Json => {
            let v = json!({
                "p": p,
                "precision": precision,
                "n": n,
                "a": format_rational(&a),
                "sum": format_rational(&closed),
                "naive_sum": naive_sum.as_ref().map(format_rational),
                "euler": format_rational(&e_n),
                "defect": defect.to_string(),
                "pass": pass,
            });
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        _ => {
            let mut s = format!(
                "p = {p}, N = {precision}, n = {n}, a = {}\nS_N = {}\nE_n(a) = {}\ndefect = {defect}\n",
                format_rational(&a),
                format_rational(&closed),
                format_rational(&e_n),
            );
            if let Some(ns) = &naive_sum {
                let word = if agree { "agrees" } else { "DISAGREES" };
                s.push_str(&format!("naive S_N = {} ({word})\n", format_rational(ns)));
            }
            s + verdict + "\n"
        }
    };
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("euler-identities").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn values() {
        assert_eq!(call(&["poly", "3"]), (0, "1/4 - 3/2*x^2 + x^3\n".into(), String::new()));
        assert_eq!(call(&["poly", "2", "--format", "json"]).1, "[\"0\",\"-1\",\"1\"]\n");
        assert_eq!(call(&["eval", "2", "1/2"]).1, "-1/4\n");
        assert_eq!(call(&["eval", "1", "-3/2"]).1, "-2\n");
        assert_eq!(call(&["numbers", "6"]).1, "1, 0, -1, 0, 5, 0, -61\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["verify", "nosuch"]).0, 2);
        assert_eq!(call(&["verify", "wsp7", "--m", "3..1"]).0, 2);
        assert_eq!(call(&["verify", "witt", "--p", "9"]).0, 2);
        assert_eq!(call(&["eval", "2", "1/0"]).0, 2);
        assert_eq!(call(&["poly", "x"]).0, 2);
        assert_eq!(call(&["witt", "--p", "2"]).0, 2);
        assert_eq!(call(&["witt", "--p", "3", "--a", "1/3"]).0, 2);
        assert_eq!(call(&["witt", "--p", "7", "--precision", "9", "--naive", "--budget", "100"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn verify_and_witt() {
        let (code, out, _) = call(&["verify", "cro2", "--n", "0..4"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("PASS 5/5\n"));
        let (code, out, err) = call(&["verify", "cro2", "--n", "0..4", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(report::from_json(&out).unwrap().len(), 5);
        assert_eq!(err, "PASS 5/5\n");
        let (code, out, _) = call(&["verify", "euler_alt_sum", "--m", "1"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = call(&["witt", "--p", "3", "--precision", "2", "--n", "1", "--a", "0", "--naive"]);
        assert_eq!(code, 0);
        assert!(out.contains("S_N = 4\n") && out.contains("E_n(a) = -1/2\n") && out.contains("defect = 2\n"));
        assert!(out.ends_with("PASS\n"));
        let (code, out, _) = call(&["witt", "--p", "3", "--precision", "1", "--n", "0", "--a", "1/2"]);
        assert_eq!(code, 0);
        assert!(out.contains("defect = +inf"));
    }
}
