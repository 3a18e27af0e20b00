//! Report values and their text, JSON and CSV renderings.

use std::fmt::Write as _;

use fgltheta_core::coeffdom::PadicApprox;
use fgltheta_core::series::LaurentSeries;
use fgltheta_core::theta::ThetaReport;
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotRun,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::NotRun => "SKIP",
        }
    }
}

/// One line of a check report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub id: &'static str,
    /// The statement being verified.
    pub claim: &'static str,
    pub status: Status,
    pub detail: String,
}

impl CheckLine {
    pub fn new(id: &'static str, claim: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        Self { id, claim, status: Status::from_bool(ok), detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub padic: u32,
    pub order: usize,
    pub fgl_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChecksReport {
    pub command: &'static str,
    pub certificate: Certificate,
    pub checks: Vec<CheckLine>,
    pub verdict: &'static str,
}

impl ChecksReport {
    pub fn new(command: &'static str, certificate: Certificate, checks: Vec<CheckLine>) -> Self {
        let verdict = if checks.iter().all(|c| c.status == Status::Pass) { "PASS" } else { "FAIL" };
        Self { command, certificate, checks, verdict }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "PASS"
    }

    pub fn to_text(&self) -> String {
        let c = &self.certificate;
        let mut out =
            format!("fgltheta {}: N = {}, K = {}, FGL order = {}\n", self.command, c.padic, c.order, c.fgl_order);
        for line in &self.checks {
            let _ = writeln!(out, "[{}] {}: {}", line.status.tag(), line.id, line.claim);
            if !line.detail.is_empty() {
                let _ = writeln!(out, "       {}", line.detail);
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let _ = writeln!(out, "verdict: {} ({passed}/{} checks passed)", self.verdict, self.checks.len());
        out
    }
}

/// A coefficient of a series in `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub degree: i64,
    /// Canonical representative in `[0, 2^precision)`.
    pub residue: u128,
    /// Representative of least absolute value.
    pub signed: i128,
    /// Number of 2-adic digits known.
    pub precision: u32,
}

/// Rows `0, …, order − 1` of `f` (degrees below the stored window read 0).
pub fn rows(f: &LaurentSeries<PadicApprox>, digits: u32) -> Vec<Row> {
    (0..f.order().max(0))
        .map(|n| {
            let c = f.coeff(n);
            let precision = c.precision().min(digits);
            let c = c.truncate(precision);
            Row { degree: n, residue: c.value(), signed: c.signed(), precision }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Precision {
    pub padic: u32,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tables {
    pub c: Vec<Row>,
    pub psi2: Vec<Row>,
    pub theta: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonMemberRow {
    pub q_exponent: i64,
    pub s_exponent: String,
    pub coefficient: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residuals {
    /// Lowest degree where `c + 1 − 4sc³` is nonzero, `null` if none.
    pub c_equation: Option<usize>,
    /// Lowest `s`-degree of `α³ − tα − 2` (with `c` taken as exact).
    pub alpha_equation: Option<i64>,
    pub alpha_vanishes_below_order: bool,
    pub alpha_even: bool,
    pub frobenius_congruence: bool,
    pub psi2_paths_agree: Option<bool>,
    pub odd_coefficients: Vec<i64>,
    pub non_members: Vec<NonMemberRow>,
}

/// The JSON document of the `theta` and `coefficients` commands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub variable: &'static str,
    pub precision: Precision,
    pub perturbed: bool,
    pub series: Tables,
    pub verdict: String,
    pub residuals: Residuals,
}

impl SeriesReport {
    pub fn from_theta(r: &ThetaReport) -> Self {
        let n = r.precision;
        let c = LaurentSeries::from_trunc(&r.c);
        let theta = r.theta.as_ref().map(|t| rows(t, n)).unwrap_or_default();
        let non_members = r
            .non_members
            .iter()
            .map(|m| {
                let (num, den) = m.s_exponent();
                NonMemberRow {
                    q_exponent: m.q_exponent,
                    s_exponent: if den == 1 { num.to_string() } else { format!("{num}/{den}") },
                    coefficient: m.coefficient.signed(),
                }
            })
            .collect();
        let res = &r.residuals;
        Self {
            variable: "s",
            precision: Precision { padic: n, order: r.order },
            perturbed: r.perturbed,
            series: Tables { c: rows(&c, n), psi2: rows(&r.psi2_s, n), theta },
            verdict: r.verdict.to_string(),
            residuals: Residuals {
                c_equation: res.c_equation,
                alpha_equation: res.alpha.residual_valuation(),
                alpha_vanishes_below_order: res.alpha.vanishes_in_window(),
                alpha_even: res.alpha.alpha_even,
                frobenius_congruence: res.frobenius_congruence,
                psi2_paths_agree: res.s_paths_agree,
                odd_coefficients: r.odd_coefficients.clone(),
                non_members,
            },
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "θ-stability of Z₂[x⁻¹]^∧ with s = x⁻¹ = t⁻³ (N = {}, K = {}{})\n",
            self.precision.padic,
            self.precision.order,
            if self.perturbed { ", perturbed by t" } else { "" }
        );
        for (name, rows) in [("c(s)", &self.series.c), ("ψ²(s)", &self.series.psi2), ("θ(s)", &self.series.theta)] {
            let _ = writeln!(out, "{name} = {}", render_series(rows));
        }
        let r = &self.residuals;
        let show = |v: Option<i64>| v.map_or("none".to_string(), |d| format!("s^{d}"));
        let _ = writeln!(out, "c-equation residual: {}", show(r.c_equation.map(|d| d as i64)));
        let _ = writeln!(
            out,
            "α³ − tα − 2 residual starts at: {} (vanishes below s^{}: {})",
            show(r.alpha_equation),
            self.precision.order,
            r.alpha_vanishes_below_order
        );
        let _ = writeln!(out, "ψ²(t) ≡ t² mod 2: {}", r.frobenius_congruence);
        if let Some(agree) = r.psi2_paths_agree {
            let _ = writeln!(out, "ψ²(s) via t and via s agree: {agree}");
        }
        if r.odd_coefficients.is_empty() {
            let _ = writeln!(out, "ψ²(s) − s² is divisible by 2");
        } else {
            let _ = writeln!(out, "odd coefficients of ψ²(s) − s² at degrees {:?}", r.odd_coefficients);
        }
        if r.non_members.is_empty() {
            let _ = writeln!(out, "no terms outside Z₂⟦s⟧");
        } else {
            let terms: Vec<String> =
                r.non_members.iter().map(|m| format!("{}·s^({})", m.coefficient, m.s_exponent)).collect();
            let _ = writeln!(out, "terms outside Z₂⟦s⟧: {}", terms.join(", "));
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }

    pub fn to_csv(&self, table: &[Row]) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["degree", "coefficient_signed"]).map_err(fmt_err)?;
        for row in table {
            w.write_record([row.degree.to_string(), row.signed.to_string()]).map_err(fmt_err)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Format(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Format(e.to_string()))
    }
}

fn fmt_err(e: csv::Error) -> CliError {
    CliError::Format(e.to_string())
}

fn render_series(rows: &[Row]) -> String {
    let mut out = String::new();
    for row in rows.iter().filter(|r| r.signed != 0) {
        let (sign, abs) =
            if row.signed < 0 { ("-", row.signed.unsigned_abs()) } else { ("+", row.signed.unsigned_abs()) };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        match row.degree {
            0 => {
                let _ = write!(out, "{abs}");
            }
            d => {
                if abs != 1 {
                    let _ = write!(out, "{abs}·");
                }
                if d == 1 {
                    out.push('s');
                } else {
                    let _ = write!(out, "s^{d}");
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    let _ = write!(out, " + O(s^{})", rows.len());
    out
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Format(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(degree: i64, signed: i128) -> Row {
        Row { degree, residue: 0, signed, precision: 8 }
    }

    #[test]
    fn series_rendering() {
        let r = [row(0, -1), row(1, -4), row(2, 0), row(3, 1)];
        assert_eq!(render_series(&r), "-1 - 4·s + s^3 + O(s^4)");
        assert_eq!(render_series(&[row(0, 0)]), "0 + O(s^1)");
    }

    #[test]
    fn check_report_verdict() {
        let cert = Certificate { padic: 8, order: 2, fgl_order: 5 };
        let ok = ChecksReport::new("verify", cert.clone(), vec![CheckLine::new("a", "x", true, "")]);
        assert!(ok.passed());
        let bad = ChecksReport::new("verify", cert, vec![CheckLine::new("a", "x", false, "why")]);
        assert!(!bad.passed());
        assert!(bad.to_text().contains("[FAIL] a: x\n       why"));
    }
}
