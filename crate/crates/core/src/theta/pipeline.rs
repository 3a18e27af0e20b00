use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::c_series::{alpha_check, solve_c, validate, AlphaCheck, CSeries};
use crate::coeffdom::{PadicApprox, QuotientExt, Ring};
use crate::realization::{LocalizedKind, LocalizedModel, XVariable};
use crate::series::{LaurentSeries, TruncSeries};
use crate::{Error, Result};

/// `ψ²(t) = t² + 3α − α²t` as a Laurent series in `q = t⁻¹`, over the
/// window `[−2, 3K + 1)`.
///
/// Computed directly and as `t²·(1 + (6c − 4c²)s)`; the two must agree.
pub fn psi2_of_t(c: &CSeries) -> Result<LaurentSeries<PadicApprox>> {
    let direct = psi2_direct(c);
    let factored = psi2_factored(c);
    if !direct.sub(&factored).is_zero() || direct.lo() != factored.lo() || direct.order() != factored.order() {
        return Err(Error::InternalMismatch(format!(
            "ψ²(t) computed directly ({direct}) and through 6c − 4c² ({factored}) disagree"
        )));
    }
    Ok(direct)
}

fn psi2_direct(c: &CSeries) -> LaurentSeries<PadicApprox> {
    let alpha = c.alpha();
    let order = alpha.order();
    let t2 = LaurentSeries::monomial(PadicApprox::exact(1), -2, order);
    let three_alpha = alpha.scale(&PadicApprox::exact(3));
    let alpha2_t = alpha.pow(2).shift(-1);
    t2.add(&three_alpha).sub(&alpha2_t)
}

fn psi2_factored(c: &CSeries) -> LaurentSeries<PadicApprox> {
    let g = LaurentSeries::from_trunc(&c.six_c_minus_four_c2()).inflate(3).shift(3);
    let one = LaurentSeries::monomial(PadicApprox::exact(1), 0, g.order());
    one.add(&g).shift(-2)
}

/// Terms `(q-exponent, coefficient)` off the `q³` lattice.
pub type OffLattice = Vec<(i64, PadicApprox)>;

/// `ψ²(s) = ψ²(t)⁻³` rewritten in `s = q³`, plus the terms that do not lie
/// on the `q³` lattice.
pub fn psi2_of_s(psi2_t: &LaurentSeries<PadicApprox>) -> Result<(LaurentSeries<PadicApprox>, OffLattice)> {
    Ok(psi2_t.powi(-3)?.deflate(3))
}

/// `s²·(1 + (6c − 4c²)s)⁻³` over `[0, K + 3)`, computed in `s` alone.
fn psi2_of_s_direct(c: &CSeries) -> Result<TruncSeries<PadicApprox>> {
    let k = c.order() + 1;
    let one = TruncSeries::constant(PadicApprox::exact(1), k);
    let g = c.six_c_minus_four_c2().extend_exact(k).shift(1).truncate(k);
    let inv = one.add(&g).inverse()?;
    Ok(inv.pow(3).shift(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilityVerdict {
    Stable,
    Unstable,
}

impl fmt::Display for StabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Stable => "STABLE",
            Self::Unstable => "UNSTABLE",
        })
    }
}

/// A term of `ψ²(s)` outside `Z₂⟦s⟧`, at exponent `numerator/3` of `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct NonMember {
    pub q_exponent: i64,
    pub coefficient: PadicApprox,
}

impl NonMember {
    /// The exponent of `s` as a reduced fraction.
    pub fn s_exponent(&self) -> (i64, i64) {
        if self.q_exponent % 3 == 0 {
            (self.q_exponent / 3, 1)
        } else {
            (self.q_exponent, 3)
        }
    }
}

impl fmt::Display for NonMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.s_exponent() {
            (n, 1) => write!(f, "{}·s^{n}", self.coefficient),
            (n, d) => write!(f, "{}·s^({n}/{d})", self.coefficient),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaResiduals {
    /// Lowest degree where `c + 1 − 4sc³` fails to vanish (`None`: zero
    /// throughout the window).
    pub c_equation: Option<usize>,
    pub alpha: AlphaCheck,
    /// `ψ²(t) ≡ t² mod 2` in the window.
    pub frobenius_congruence: bool,
    /// `ψ²(s)` obtained from `ψ²(t)⁻³` equals `s²(1 + (6c − 4c²)s)⁻³`.
    /// Not applicable to a perturbed run.
    pub s_paths_agree: Option<bool>,
}

/// Everything the stability check computed, at certificate `(N, K)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaReport {
    pub precision: u32,
    pub order: usize,
    pub perturbed: bool,
    pub c: TruncSeries<PadicApprox>,
    pub psi2_t: LaurentSeries<PadicApprox>,
    /// The lattice part of `ψ²(s)`, window `[lo, K + 3)`.
    pub psi2_s: LaurentSeries<PadicApprox>,
    /// `(ψ²(s) − s²)/2`, when every coefficient of `ψ²(s) − s²` is even.
    pub theta: Option<LaurentSeries<PadicApprox>>,
    /// Degrees `n` where the coefficient of `sⁿ` in `ψ²(s) − s²` is odd.
    pub odd_coefficients: Vec<i64>,
    pub non_members: Vec<NonMember>,
    pub residuals: ThetaResiduals,
    pub verdict: StabilityVerdict,
}

impl ThetaReport {
    pub fn is_stable(&self) -> bool {
        self.verdict == StabilityVerdict::Stable
    }
}

/// Builds `ψ²` from `c`, re-expresses it in `s = x⁻¹`, forms θ and decides
/// whether `Z₂[x⁻¹]^∧` is closed under it in the window.
///
/// With `perturb` set, a spurious `t` is added to `ψ²(t)` first; the result
/// must come out unstable.
pub fn theta_pipeline(precision: u32, order: usize, perturb: bool) -> Result<ThetaReport> {
    validate(precision, order)?;
    let c = solve_c(precision, order)?;
    let alpha = alpha_check(&c);
    let mut psi2_t = psi2_of_t(&c)?;
    if perturb {
        let bump = LaurentSeries::monomial(PadicApprox::exact(1), -1, psi2_t.order());
        psi2_t = psi2_t.add(&bump);
    }
    let frobenius_congruence = psi2_t
        .sub(&LaurentSeries::monomial(PadicApprox::exact(1), -2, psi2_t.order()))
        .terms()
        .all(|(_, x)| x.valuation().is_none_or(|v| v >= 1));

    let (psi2_s, off_lattice) = psi2_of_s(&psi2_t).map_err(|e| match e {
        Error::NonUnitLeadingCoefficient => Error::InternalMismatch(format!("ψ²(t) is not invertible: {psi2_t}")),
        other => other,
    })?;
    let s_paths_agree = if perturb {
        None
    } else {
        let direct = LaurentSeries::from_trunc(&psi2_of_s_direct(&c)?);
        let agree = direct.sub(&psi2_s).is_zero() && direct.order() == psi2_s.order();
        if !agree {
            return Err(Error::InternalMismatch(format!("ψ²(s) via t ({psi2_s}) and via s ({direct}) disagree")));
        }
        Some(true)
    };

    let s2 = LaurentSeries::monomial(PadicApprox::exact(1), 2, psi2_s.order());
    let diff = psi2_s.sub(&s2);
    let odd_coefficients: Vec<i64> = diff.terms().filter(|(_, x)| x.valuation() == Some(0)).map(|(n, _)| n).collect();
    let theta = odd_coefficients.is_empty().then(|| {
        let coeffs =
            (diff.lo()..diff.order()).map(|n| diff.coeff(n).shr_exact(1).expect("coefficient is even")).collect();
        LaurentSeries::from_coeffs(&(), diff.lo(), coeffs)
    });

    let model = LocalizedModel::new(LocalizedKind::K1Zero, XVariable::XInverse, psi2_s.clone());
    let mut non_members: Vec<NonMember> = model
        .obstructions()
        .into_iter()
        .map(|(x_exp, coefficient)| NonMember { q_exponent: -3 * x_exp, coefficient })
        .collect();
    non_members.extend(off_lattice.into_iter().map(|(q_exponent, coefficient)| NonMember { q_exponent, coefficient }));
    non_members.sort_by_key(|m| m.q_exponent);

    let c_equation = c.residual().valuation();
    let stable = non_members.is_empty() && odd_coefficients.is_empty();
    Ok(ThetaReport {
        precision,
        order,
        perturbed: perturb,
        c: c.series().clone(),
        psi2_t,
        psi2_s,
        theta,
        odd_coefficients,
        non_members,
        residuals: ThetaResiduals { c_equation, alpha, frobenius_congruence, s_paths_agree },
        verdict: if stable { StabilityVerdict::Stable } else { StabilityVerdict::Unstable },
    })
}

/// `t ↦ ψ²(t)` acts as squaring on `tⁿ` mod 2, for `n` in `range`.
pub fn frobenius_on_monomials(
    psi2_t: &LaurentSeries<PadicApprox>,
    range: core::ops::RangeInclusive<i32>,
) -> Result<bool> {
    for n in range {
        let image = psi2_t.powi(n)?;
        let square = LaurentSeries::monomial(PadicApprox::exact(1), -2 * i64::from(n), image.order());
        let even = image.sub(&square).terms().all(|(_, x)| x.valuation().is_none_or(|v| v >= 1));
        if !even {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates `A(d) = a₀(t) + a₁(t)d + a₂(t)d²`, with the `aᵢ` polynomials
/// in `t` (as stored by the Vélu computation), at `d = α`, `t = q⁻¹`.
pub fn evaluate_at_alpha(a: &QuotientExt<TruncSeries<PadicApprox>>, c: &CSeries) -> LaurentSeries<PadicApprox> {
    let alpha = c.alpha();
    let order = alpha.order();
    let in_q = |p: &TruncSeries<PadicApprox>| {
        let n = p.order() as i64;
        let coeffs: Vec<PadicApprox> = p.coeffs().iter().rev().copied().collect();
        LaurentSeries::from_coeffs(&(), 1 - n, coeffs).extend_exact(order)
    };
    let [a0, a1, a2] = a.coeffs();
    in_q(a0).add(&in_q(a1).mul(&alpha)).add(&in_q(a2).mul(&alpha.pow(2)))
}
