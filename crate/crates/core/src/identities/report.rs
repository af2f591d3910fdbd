//! Rendering of identity reports as JSON, CSV, Markdown and plain text.
//!
//! JSON is the canonical form and parses back into equal reports; the other
//! formats are projections of it.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use super::{CheckerId, IdentityReport, Mode, Param, Residual};
use crate::numeric::{format_rational, parse_rational, Rational};
use crate::padic::Valuation;
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
    Text,
}

fn strings(c: &[Rational]) -> Value {
    Value::Array(c.iter().map(|r| Value::String(format_rational(r))).collect())
}

fn param_value(p: &Param) -> Value {
    match p {
        Param::Int(v) => json!(v),
        Param::Rat(r) => Value::String(format_rational(r)),
        Param::Text(t) => Value::String(t.clone()),
        Param::Poly(c) => strings(c),
    }
}

fn parse_coeffs(v: &Value) -> Result<Vec<Rational>, String> {
    let items = v.as_array().ok_or("expected an array of rationals")?;
    items
        .iter()
        .map(|s| {
            let s = s.as_str().ok_or("coefficients must be strings")?;
            parse_rational(s).map_err(|e| e.to_string())
        })
        .collect()
}

fn parse_param(v: &Value) -> Result<Param, String> {
    match v {
        Value::Number(n) => n.as_i64().map(Param::Int).ok_or_else(|| format!("non-integer parameter {n}")),
        Value::String(s) => Ok(parse_rational(s).map(Param::Rat).unwrap_or_else(|_| Param::Text(s.clone()))),
        Value::Array(_) => parse_coeffs(v).map(Param::Poly),
        other => Err(format!("unsupported parameter value {other}")),
    }
}

impl IdentityReport {
    pub fn to_json_value(&self) -> Value {
        let params: Map<String, Value> = self.params.iter().map(|(k, v)| (k.clone(), param_value(v))).collect();
        let residual = match &self.residual {
            Residual::Poly(p) => strings(p.coeffs()),
            Residual::Rational(r) => Value::String(format_rational(r)),
            Residual::Defect(Valuation::Finite(v)) => json!(v),
            Residual::Defect(Valuation::Infinite) => Value::String("+inf".into()),
        };
        json!({
            "id": self.id.as_str(),
            "params": params,
            "mode": self.mode.as_str(),
            "residual": residual,
            "pass": self.pass,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    pub fn from_json_value(v: &Value) -> Result<Self, String> {
        let field = |name: &str| v.get(name).ok_or_else(|| format!("missing field '{name}'"));
        let id: CheckerId = field("id")?
            .as_str()
            .ok_or("id must be a string")?
            .parse()
            .map_err(|e: super::CheckError| e.to_string())?;
        let params = field("params")?
            .as_object()
            .ok_or("params must be an object")?
            .iter()
            .map(|(k, v)| parse_param(v).map(|p| (k.clone(), p)))
            .collect::<Result<Vec<_>, _>>()?;
        let mode = match field("mode")?.as_str() {
            Some("symbolic") => Mode::Symbolic,
            Some("pointwise") => Mode::Pointwise,
            Some("valuation") => Mode::Valuation,
            other => return Err(format!("unknown mode {other:?}")),
        };
        let raw = field("residual")?;
        let residual = match mode {
            Mode::Symbolic => Residual::Poly(Poly::new(parse_coeffs(raw)?)),
            Mode::Pointwise => {
                let s = raw.as_str().ok_or("pointwise residual must be a string")?;
                Residual::Rational(parse_rational(s).map_err(|e| e.to_string())?)
            }
            Mode::Valuation => match raw {
                Value::String(s) if s == "+inf" => Residual::Defect(Valuation::Infinite),
                Value::Number(n) => Residual::Defect(Valuation::Finite(n.as_i64().ok_or("defect must be an integer")?)),
                other => return Err(format!("bad defect {other}")),
            },
        };
        let pass = field("pass")?.as_bool().ok_or("pass must be a boolean")?;
        let elapsed_ms = field("elapsed_ms")?.as_f64().ok_or("elapsed_ms must be a number")?;
        Ok(IdentityReport { id, params, mode, residual, pass, elapsed_ms })
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_value().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IdentityReport {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        IdentityReport::from_json_value(&v).map_err(D::Error::custom)
    }
}

/// `PASS k/k` when everything passed, otherwise `FAIL j/k` with `j` passing.
pub fn summary(reports: &[IdentityReport]) -> String {
    let passed = reports.iter().filter(|r| r.pass).count();
    let verdict = if passed == reports.len() { "PASS" } else { "FAIL" };
    format!("{verdict} {passed}/{}", reports.len())
}

pub fn all_pass(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

pub fn to_json(reports: &[IdentityReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn from_json(s: &str) -> Result<Vec<IdentityReport>, serde_json::Error> {
    serde_json::from_str(s)
}

fn verdict(r: &IdentityReport) -> &'static str {
    if r.pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn to_csv(reports: &[IdentityReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "params", "mode", "residual", "pass", "elapsed_ms"]).expect("in-memory write");
    for r in reports {
        w.write_record([
            r.id.as_str(),
            &r.params_text(),
            r.mode.as_str(),
            &r.residual.to_string(),
            if r.pass { "true" } else { "false" },
            &format!("{:.3}", r.elapsed_ms),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn to_markdown(reports: &[IdentityReport]) -> String {
    let mut out = String::from("| id | params | mode | residual | verdict | ms |\n|---|---|---|---|---|---|\n");
    for r in reports {
        out.push_str(&format!(
            "| {} | {} | {} | `{}` | {} | {:.3} |\n",
            r.id,
            r.params_text(),
            r.mode,
            r.residual,
            verdict(r),
            r.elapsed_ms
        ));
    }
    out
}

pub fn to_text(reports: &[IdentityReport]) -> String {
    reports
        .iter()
        .map(|r| format!("{} {} {} [{}] residual = {}\n", verdict(r), r.id, r.params_text(), r.mode, r.residual))
        .collect()
}

pub fn render(reports: &[IdentityReport], format: Format) -> String {
    match format {
        Format::Json => to_json(reports) + "\n",
        Format::Csv => to_csv(reports),
        Format::Md => to_markdown(reports),
        Format::Text => to_text(reports),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{check_lem1, check_witt, check_wsp7, check_cro2};
    use crate::numeric::{int, rat};

    fn sample() -> Vec<IdentityReport> {
        vec![
            check_wsp7(2, 1).unwrap(),
            check_cro2(3).unwrap(),
            check_witt(2, rat(1, 2), 3, 2, true, 1000).unwrap(),
            check_witt(0, int(1), 5, 1, false, 1000).unwrap(),
            check_lem1(5, 2, 0, 7, 1000).unwrap(),
        ]
    }

    #[test]
    fn json_round_trip() {
        let reports = sample();
        let back = from_json(&to_json(&reports)).unwrap();
        assert_eq!(back, reports);
    }

    #[test]
    fn json_shape() {
        let v = check_wsp7(1, 0).unwrap().to_json_value();
        assert_eq!(v["id"], "wsp7");
        assert_eq!(v["params"]["m"], 1);
        assert_eq!(v["mode"], "symbolic");
        assert_eq!(v["residual"], json!([]));
        assert_eq!(v["pass"], true);
        let w = check_witt(0, rat(1, 2), 3, 1, false, 10).unwrap().to_json_value();
        assert_eq!(w["residual"], "+inf");
        assert_eq!(w["params"]["a"], "1/2");
    }

    #[test]
    fn projections() {
        let reports = sample();
        let csv = to_csv(&reports);
        assert_eq!(csv.lines().count(), reports.len() + 1);
        assert!(csv.starts_with("id,params,mode,residual,pass,elapsed_ms"));
        assert_eq!(to_markdown(&reports).lines().count(), reports.len() + 2);
        assert!(to_text(&reports).lines().all(|l| l.starts_with("PASS ")));
        assert_eq!(summary(&reports), format!("PASS {0}/{0}", reports.len()));
    }

    #[test]
    fn summary_counts_passes() {
        let mut reports = sample();
        reports[1].pass = false;
        assert_eq!(summary(&reports), format!("FAIL {}/{}", reports.len() - 1, reports.len()));
        assert_eq!(summary(&[]), "PASS 0/0");
    }
}
