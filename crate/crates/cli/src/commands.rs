//! The subcommands. Each returns the rendered report and whether every
//! verdict in it passed.

use std::fmt::Display;

use fgltheta_core::coeffdom::{QuotientExt, Rational, Ring};
use fgltheta_core::ellfgl::{
    expand_w, fgl_from_curve, min_precision, residual_v1_v2, rezk_isogeny_integral, rezk_isogeny_two_inverted,
    velu_two_isogeny, w_relation_residual, AffinePoint, FormalGroupLaw, WeierstrassCurve,
};
use fgltheta_core::realization::{
    check_realization_problem, height_diagnostics, lubin_tate_curve, lubin_tate_invariants, orbit_independence,
    GradedPoly, HeightReport, LubinTateModel, PolynomialRing,
};
use fgltheta_core::series::TruncSeries;
use fgltheta_core::theta::{evaluate_at_alpha, frobenius_on_monomials, psi2_of_t, solve_c, theta_pipeline};

use crate::config::{Command, Format, RunConfig, SeriesChoice};
use crate::error::CliError;
use crate::report::{to_json, Certificate, CheckLine, ChecksReport, SeriesReport};

/// `t`-adic truncation used by the isogeny checks.
pub const VELU_T_ORDER: usize = 8;
/// `u₁`-adic truncation used by the Lubin-Tate checks.
pub const LUBIN_TATE_ORDER: usize = 8;

pub struct Outcome {
    pub body: String,
    pub passed: bool,
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    match config.command {
        Command::Verify => {
            let mut checks = realization_checks(config)?;
            checks.extend(lubin_tate_checks(config)?);
            checks.extend(velu_checks(config)?);
            checks.extend(theta_checks(config)?);
            render_checks("verify", config, checks)
        }
        Command::Theta => {
            let report = theta_pipeline(config.padic_digits, config.series_order, config.negative_control)?;
            let doc = SeriesReport::from_theta(&report);
            let body = match config.format {
                Format::Json => to_json(&doc)?,
                _ => doc.to_text(),
            };
            Ok(Outcome { body, passed: report.is_stable() })
        }
        Command::Coefficients { series } => {
            let report = theta_pipeline(config.padic_digits, config.series_order, config.negative_control)?;
            let doc = SeriesReport::from_theta(&report);
            let body = match config.format {
                Format::Json => to_json(&doc)?,
                Format::Csv => {
                    let table = match series {
                        SeriesChoice::C => &doc.series.c,
                        SeriesChoice::Psi2 => &doc.series.psi2,
                        SeriesChoice::Theta => &doc.series.theta,
                    };
                    doc.to_csv(table)?
                }
                Format::Text => doc.to_text(),
            };
            Ok(Outcome { body, passed: true })
        }
        Command::Velu => render_checks("velu", config, velu_checks(config)?),
        Command::LubinTate => render_checks("lubin-tate", config, lubin_tate_checks(config)?),
    }
}

fn render_checks(command: &'static str, config: &RunConfig, checks: Vec<CheckLine>) -> Result<Outcome, CliError> {
    let certificate =
        Certificate { padic: config.padic_digits, order: config.series_order, fgl_order: config.fgl_order };
    let report = ChecksReport::new(command, certificate, checks);
    let body = match config.format {
        Format::Json => to_json(&report)?,
        _ => report.to_text(),
    };
    Ok(Outcome { body, passed: report.passed() })
}

fn universal_curve() -> WeierstrassCurve<GradedPoly> {
    WeierstrassCurve::gamma1_3(GradedPoly::a(), GradedPoly::b())
}

fn realization_checks(config: &RunConfig) -> Result<Vec<CheckLine>, CliError> {
    let k = config.fgl_order;
    let curve = universal_curve();
    let fgl = fgl_from_curve(&curve, k)?;
    let mut out = Vec::new();

    let w = expand_w(&curve, k)?;
    out.push(CheckLine::new(
        "fgl.w-expansion",
        "w(z) satisfies the Weierstrass relation below z^K",
        w_relation_residual(&curve, &w).is_zero(),
        format!("w = {}", fmt_series_in(&w, "z")),
    ));
    out.push(CheckLine::new("fgl.unitality", "F(z, 0) = F(0, z) = z", fgl.unitality_defects().is_empty(), ""));
    out.push(CheckLine::new("fgl.commutativity", "F(z₁, z₂) = F(z₂, z₁)", fgl.commutativity_defects().is_empty(), ""));
    let assoc = fgl.associativity_defects();
    out.push(CheckLine::new(
        "fgl.associativity",
        "F(F(z₁, z₂), z₃) = F(z₁, F(z₂, z₃)) below total degree K",
        assoc.is_empty(),
        if assoc.is_empty() { String::new() } else { format!("defects at {assoc:?}") },
    ));
    out.push(CheckLine::new("fgl.inverse", "F(z, [−1](z)) = 0", fgl.inverse_residual().is_zero(), ""));
    out.push(CheckLine::new(
        "fgl.z1z2",
        "the coefficient of z₁z₂ is −a",
        fgl.law().coeff(1, 1) == GradedPoly::a().neg(),
        format!("found {}", fgl.law().coeff(1, 1)),
    ));

    let (v1, v2) = residual_v1_v2(&fgl)?;
    out.push(CheckLine::new("residues.v1", "v₁ ≡ a mod 2", v1 == GradedPoly::a(), format!("v₁ ≡ {v1}")));
    out.push(CheckLine::new("residues.v2", "v₂ ≡ b mod (2, v₁)", v2 == GradedPoly::b(), format!("v₂ ≡ {v2}")));

    let report = check_realization_problem(&PolynomialRing::gamma1_3(), &fgl)?;
    let ids = ["realization.grading", "realization.finite", "realization.regular", "realization.quotient"];
    for (id, v) in ids.into_iter().zip(&report.verdicts) {
        out.push(CheckLine::new(id, v.label, v.passed, v.detail.clone()));
    }

    let additive = FormalGroupLaw::additive(&(), k);
    let r = check_realization_problem(&PolynomialRing::gamma1_3(), &additive)?;
    out.push(CheckLine::new(
        "realization.control-additive",
        "the additive law is rejected at the regularity axiom",
        !r.verdicts[2].passed,
        r.verdicts[2].detail.clone(),
    ));
    let b_zero = fgl_from_curve(&WeierstrassCurve::gamma1_3(GradedPoly::a(), GradedPoly::default()), k)?;
    let r = check_realization_problem(&PolynomialRing::a_only(), &b_zero)?;
    out.push(CheckLine::new(
        "realization.control-b-zero",
        "Z_(2)[a] with the curve at b = 0 is rejected",
        !r.passed(),
        r.verdicts.iter().filter(|v| !v.passed).map(|v| v.label).collect::<Vec<_>>().join(", "),
    ));
    Ok(out)
}

fn lubin_tate_checks(config: &RunConfig) -> Result<Vec<CheckLine>, CliError> {
    let model = LubinTateModel::new(config.padic_digits, LUBIN_TATE_ORDER)?;
    let mut out = Vec::new();
    let inv = lubin_tate_invariants(&model)?;
    let cert = format!("certificate (N, K) = ({}, {})", inv.precision, inv.order);
    out.push(CheckLine::new(
        "lubin-tate.invariants-trace",
        "the orbit sum maps degree 0 onto span{u₁^{3k}}",
        inv.trace_route,
        cert.clone(),
    ));
    out.push(CheckLine::new(
        "lubin-tate.invariants-direct",
        "the fixed points of ζ and σ in degree 0 are span{u₁^{3k}}",
        inv.direct_route,
        cert,
    ));
    let orbit = orbit_independence(&model);
    out.push(CheckLine::new(
        "lubin-tate.orbit",
        "the six translates of ω(1 + u + u²) are linearly independent",
        orbit.independent_in_total(),
        format!(
            "rank {} in total; per degree {}",
            orbit.total_rank,
            orbit.degreewise_ranks.iter().map(|(d, r)| format!("u^{d}: {r}")).collect::<Vec<_>>().join(", ")
        ),
    ));

    let k = config.fgl_order;
    let show = |h: &HeightReport| format!("(h1, h2) = ({}, {})", h.h1, h.h2);
    let curve = height_diagnostics(&fgl_from_curve(&lubin_tate_curve(&model), k)?)?;
    out.push(CheckLine::new(
        "lubin-tate.height-curve",
        "the curve law with a = u₁u, b = u³ has height pattern (true, true)",
        curve.h1 && curve.h2,
        show(&curve),
    ));
    let mult = height_diagnostics(&FormalGroupLaw::multiplicative(&model.u_pow(1), k))?;
    out.push(CheckLine::new(
        "lubin-tate.height-multiplicative",
        "the multiplicative law has height pattern (true, false)",
        mult.h1 && !mult.h2,
        show(&mult),
    ));
    let add = height_diagnostics(&FormalGroupLaw::additive(&model, k))?;
    out.push(CheckLine::new(
        "lubin-tate.height-additive",
        "the additive law has height pattern (false, false)",
        !add.h1 && !add.h2,
        show(&add),
    ));
    Ok(out)
}

fn velu_checks(config: &RunConfig) -> Result<Vec<CheckLine>, CliError> {
    let mut out = Vec::new();
    let r = |n| Rational::new(n, 1);
    let e = WeierstrassCurve::new(r(0), r(0), r(0), r(1), r(0));
    let image = velu_two_isogeny(&e, &AffinePoint::new(r(0), r(0)))?;
    out.push(CheckLine::new(
        "velu.classical",
        "y² = x³ + x modulo (0, 0) is y² = x³ − 4x",
        image == WeierstrassCurve::new(r(0), r(0), r(0), r(-4), r(0)),
        format!("a₄ = {}, a₆ = {}", image.a4, image.a6),
    ));

    let q = rezk_isogeny_two_inverted(VELU_T_ORDER)?;
    out.push(CheckLine::new(
        "velu.kernel",
        "(−d⁻², −d⁻³) lies on y² + txy + y = x³ and has order 2",
        q.on_curve && q.two_torsion,
        format!("on curve: {}, 2-torsion: {}", q.on_curve, q.two_torsion),
    ));
    out.push(CheckLine::new(
        "velu.image-rational",
        "with 2 inverted the normalized image is y² + (t² + 3d − td²)xy + y = x³",
        q.mismatches().is_empty(),
        format!("a₁ = {}, a₃ = {}", fmt_td(&q.image.a1), fmt_td(&q.image.a3)),
    ));

    let z = rezk_isogeny_integral(config.padic_digits, VELU_T_ORDER)?;
    out.push(CheckLine::new(
        "velu.image-integral",
        "mod 2^N the normalized image is y² + (t² + 3d − td²)xy + y = x³",
        z.passed(),
        format!(
            "a₁ = {} with {} digits left; kernel (−1, −1) on the model rescaled by d",
            fmt_td(&z.image.a1),
            min_precision(&z.image.a1)
        ),
    ));

    let c = solve_c(config.padic_digits, config.series_order)?;
    let at_alpha = evaluate_at_alpha(&z.image.a1, &c);
    let psi2 = psi2_of_t(&c)?;
    out.push(CheckLine::new(
        "velu.alpha",
        "the image coefficient at d = α equals ψ²(t)",
        at_alpha.sub(&psi2).is_zero(),
        format!("window q^{}..q^{}", psi2.lo(), psi2.order()),
    ));
    Ok(out)
}

fn theta_checks(config: &RunConfig) -> Result<Vec<CheckLine>, CliError> {
    let (n, k) = (config.padic_digits, config.series_order);
    let report = theta_pipeline(n, k, config.negative_control)?;
    let mut out = Vec::new();
    let signed: Vec<i128> = report.c.coeffs().iter().map(|x| x.signed()).collect();
    let expected = [-1i128, -4, -48, -768];
    let shown = signed.len().min(expected.len());
    out.push(CheckLine::new(
        "theta.c-coefficients",
        "c = −1 − 4s − 48s² − 768s³ − …",
        signed[..shown] == expected[..shown],
        format!("{:?}", &signed[..shown]),
    ));
    let res = &report.residuals;
    out.push(CheckLine::new(
        "theta.c-equation",
        "c + 1 − 4sc³ vanishes below s^K",
        res.c_equation.is_none(),
        format!("{} fixed-point steps", k),
    ));
    out.push(CheckLine::new(
        "theta.alpha",
        "α = 2c/t solves α³ − tα − 2 = 0 below s^K and is even",
        res.alpha.vanishes_in_window() && res.alpha.alpha_even,
        format!("Hensel uniqueness among roots ≡ 0 mod 2: {}", res.alpha.hensel_unique),
    ));
    let monomials = frobenius_on_monomials(&report.psi2_t, -3..=3)?;
    out.push(CheckLine::new(
        "theta.frobenius",
        "ψ²(tⁿ) ≡ t²ⁿ mod 2 for |n| ≤ 3",
        res.frobenius_congruence && monomials,
        "",
    ));
    out.push(match res.s_paths_agree {
        Some(ok) => CheckLine::new("theta.dual-paths", "ψ²(s) via t and via s agree", ok, ""),
        None => CheckLine {
            id: "theta.dual-paths",
            claim: "ψ²(s) via t and via s agree",
            status: crate::report::Status::NotRun,
            detail: "not applicable to the perturbed run".into(),
        },
    });
    out.push(CheckLine::new(
        "theta.integrality",
        "ψ²(s) − s² is divisible by 2",
        report.odd_coefficients.is_empty(),
        report.theta.as_ref().map_or_else(
            || format!("odd at degrees {:?}", report.odd_coefficients),
            |t| format!("θ(s) s³-coefficient {}", t.coeff(3).signed()),
        ),
    ));
    out.push(CheckLine::new(
        "theta.membership",
        "ψ²(s) lies in Z₂⟦s⟧ = Z₂[x⁻¹]^∧ within the window",
        report.non_members.is_empty(),
        report.non_members.iter().take(4).map(ToString::to_string).collect::<Vec<_>>().join(", "),
    ));
    out.push(CheckLine::new(
        "theta.verdict",
        "Z₂[x⁻¹]^∧ is stable under θ",
        report.is_stable(),
        report.verdict.to_string(),
    ));
    Ok(out)
}

fn fmt_series_in<R: Ring + Display>(f: &TruncSeries<R>, var: &str) -> String {
    let mut parts = Vec::new();
    for (n, c) in f.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        parts.push(match n {
            0 => format!("{c}"),
            1 => format!("({c})·{var}"),
            _ => format!("({c})·{var}^{n}"),
        });
    }
    if parts.is_empty() {
        parts.push("0".into());
    }
    format!("{} + O({var}^{})", parts.join(" + "), f.order())
}

/// `Σ cᵢⱼ·tⁱ·dʲ`, terms in increasing powers of `d`, then `t`.
fn fmt_td<R: Ring + Display>(x: &QuotientExt<TruncSeries<R>>) -> String {
    let mut parts = Vec::new();
    for (j, series) in x.coeffs().iter().enumerate() {
        for (i, c) in series.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mono = match (i, j) {
                (0, 0) => String::new(),
                (0, _) => pow("d", j),
                (_, 0) => pow("t", i),
                _ => format!("{}·{}", pow("t", i), pow("d", j)),
            };
            parts.push((c.to_string(), mono));
        }
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, mono)) in parts.into_iter().enumerate() {
        let (neg, abs) = match c.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, c),
        };
        if k == 0 {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (abs.as_str(), mono.is_empty()) {
            (_, true) => out.push_str(&abs),
            ("1", false) => out.push_str(&mono),
            (_, false) => out.push_str(&format!("{abs}·{mono}")),
        }
    }
    out
}

fn pow(var: &str, e: usize) -> String {
    if e == 1 {
        var.into()
    } else {
        format!("{var}^{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fgltheta_core::coeffdom::Integer;

    #[test]
    fn td_formatting() {
        let t = TruncSeries::variable(&(), 4);
        let d = QuotientExt::<TruncSeries<Integer>>::generator(t.clone());
        let tt = QuotientExt::from_base(t.clone(), t.clone());
        let a1 = tt.square().add(&d.scale_i64(3)).sub(&tt.mul(&d.square()));
        assert_eq!(fmt_td(&a1), "t^2 + 3·d - t·d^2");
        assert_eq!(fmt_td(&d.zero_like()), "0");
        assert_eq!(fmt_td(&d.int_like(-1)), "-1");
    }
}
