use super::curve::{AffinePoint, WeierstrassCurve};
use crate::coeffdom::{PadicApprox, QuotientExt, Rational, Ring};
use crate::series::TruncSeries;
use crate::{Error, Result};

/// Whether `P = −P`, i.e. `2y + a₁x + a₃ = 0`.
pub fn is_two_torsion<R: Ring>(curve: &WeierstrassCurve<R>, p: &AffinePoint<R>) -> Result<bool> {
    if !curve.is_on_curve(p) {
        return Err(Error::NotOnCurve);
    }
    Ok(two_torsion_residual(curve, p).is_zero())
}

fn two_torsion_residual<R: Ring>(curve: &WeierstrassCurve<R>, p: &AffinePoint<R>) -> R {
    p.y.scale_i64(2).add(&curve.a1.mul(&p.x)).add(&curve.a3)
}

/// `v = 3x₀² + 2a₂x₀ + a₄ − a₁y₀` for the kernel point.
fn velu_v<R: Ring>(curve: &WeierstrassCurve<R>, p: &AffinePoint<R>) -> R {
    p.x.square().scale_i64(3).add(&curve.a2.mul(&p.x).scale_i64(2)).add(&curve.a4).sub(&curve.a1.mul(&p.y))
}

/// The quotient of `curve` by `{O, P}` in Vélu's model:
/// `A₄ = a₄ − 5v`, `A₆ = a₆ − (a₁² + 4a₂)v − 7x₀v`, other coefficients kept.
pub fn velu_two_isogeny<R: Ring>(curve: &WeierstrassCurve<R>, p: &AffinePoint<R>) -> Result<WeierstrassCurve<R>> {
    if !is_two_torsion(curve, p).map_err(|_| Error::KernelNotTwoTorsion)? {
        return Err(Error::KernelNotTwoTorsion);
    }
    let v = velu_v(curve, p);
    let w = p.x.mul(&v);
    let c = curve.a1.square().add(&curve.a2.scale_i64(4));
    Ok(WeierstrassCurve {
        a1: curve.a1.clone(),
        a2: curve.a2.clone(),
        a3: curve.a3.clone(),
        a4: curve.a4.sub(&v.scale_i64(5)),
        a6: curve.a6.sub(&c.mul(&v)).sub(&w.scale_i64(7)),
    })
}

/// Image of `q` (not in the kernel) under the isogeny of [`velu_two_isogeny`]:
///
/// `X = x + v/(x − x₀)`, `Y = y − v·(a₁(x − x₀) + y − y₀)/(x − x₀)²`.
pub fn velu_map_point<R: Ring>(
    curve: &WeierstrassCurve<R>,
    kernel: &AffinePoint<R>,
    q: &AffinePoint<R>,
) -> Result<AffinePoint<R>> {
    let v = velu_v(curve, kernel);
    let dx = q.x.sub(&kernel.x);
    let div = |n: R, d: &R| n.try_div_exact(d).ok_or(Error::NotDivisible);
    let x = q.x.add(&div(v.clone(), &dx)?);
    let num = v.mul(&curve.a1.mul(&dx).add(&q.y).sub(&kernel.y));
    let y = q.y.sub(&div(num, &dx.square())?);
    Ok(AffinePoint { x, y })
}

/// Brings the Vélu image of a curve `y² + a·xy + b·y = x³` back to the same
/// shape.
///
/// The image of the 3-torsion point `(0,0)` is moved to the origin and the
/// tangent there is sheared to `y = 0`, which kills `a₂`, `a₄`, `a₆`. The
/// final scaling is `u = −(x₀/y₀)·β`; when `β³ = b` it returns the same `a₃`.
pub fn normalize_gamma1_3_image<R: Ring>(
    domain: &WeierstrassCurve<R>,
    kernel: &AffinePoint<R>,
    beta: &R,
) -> Result<WeierstrassCurve<R>> {
    if !domain.is_gamma1_3_form() {
        return Err(Error::InternalMismatch("domain is not of the form y² + axy + by = x³".into()));
    }
    let image = velu_two_isogeny(domain, kernel)?;
    let origin = AffinePoint::new(domain.a1.zero_like(), domain.a1.zero_like());
    let p = velu_map_point(domain, kernel, &origin)?;
    let tangent_num =
        p.x.square().scale_i64(3).add(&image.a2.mul(&p.x).scale_i64(2)).add(&image.a4).sub(&image.a1.mul(&p.y));
    let tangent_den = two_torsion_residual(&image, &p);
    let m = tangent_num.try_div_exact(&tangent_den).ok_or(Error::NotDivisible)?;
    let u = kernel.x.neg().try_div_exact(&kernel.y).ok_or(Error::NotDivisible)?.mul(beta);
    let out = image.change_coordinates(&u, &p.x, &m, &p.y)?;
    if !out.is_gamma1_3_form() {
        return Err(Error::InternalMismatch("normalized image keeps a2, a4 or a6".into()));
    }
    Ok(out)
}

/// Outcome of reproducing the degree-2 isogeny out of
/// `E: y² + t·xy + y = x³` over `B[d]/(d³ − td − 2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RezkIsogenyCheck<B: Ring> {
    pub domain: WeierstrassCurve<QuotientExt<B>>,
    pub kernel: AffinePoint<QuotientExt<B>>,
    pub on_curve: bool,
    pub two_torsion: bool,
    /// The normalized image, `y² + A·xy + y = x³`.
    pub image: WeierstrassCurve<QuotientExt<B>>,
    /// `y² + (t² + 3d − td²)xy + y = x³`.
    pub expected: WeierstrassCurve<QuotientExt<B>>,
}

impl<B: Ring> RezkIsogenyCheck<B> {
    /// Coefficient indices (1, 2, 3, 4, 6) at which image and expectation
    /// differ.
    pub fn mismatches(&self) -> alloc::vec::Vec<u8> {
        let labels = [1u8, 2, 3, 4, 6];
        let img = self.image.coefficients();
        let exp = self.expected.coefficients();
        labels
            .iter()
            .zip(img.iter().zip(exp.iter()))
            .filter(|(_, (a, b))| !a.sub(b).is_zero())
            .map(|(l, _)| *l)
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.on_curve && self.two_torsion && self.mismatches().is_empty()
    }
}

fn expected_image<B: Ring>(t: &B) -> WeierstrassCurve<QuotientExt<B>> {
    let q = |c: B| QuotientExt::from_base(c, t.clone());
    let d = QuotientExt::generator(t.clone());
    let tq = q(t.clone());
    let a = tq.square().add(&d.scale_i64(3)).sub(&tq.mul(&d.square()));
    WeierstrassCurve::gamma1_3(a, q(t.one_like()))
}

/// The check with 2 inverted: coefficients are rational series in `t`, so
/// `d⁻¹ = (d² − t)/2` exists and the kernel point is `(−d⁻², −d⁻³)`.
pub fn rezk_isogeny_two_inverted(t_order: usize) -> Result<RezkIsogenyCheck<TruncSeries<Rational>>> {
    let t = TruncSeries::variable(&(), t_order);
    let q = |c: TruncSeries<Rational>| QuotientExt::from_base(c, t.clone());
    let d = QuotientExt::generator(t.clone());
    let d_inv = d.inverse().ok_or(Error::NotAUnit)?;
    let kernel = AffinePoint::new(d_inv.square().neg(), d_inv.square().mul(&d_inv).neg());
    let domain = WeierstrassCurve::gamma1_3(q(t.clone()), q(t.one_like()));
    finish(domain, kernel, &q(t.one_like()), expected_image(&t))
}

/// The check over `Z/2^N` series in `t`, where `d` is not a unit.
///
/// Works on `E` rescaled by `d` (`a₁ = td`, `a₃ = d³`), where the kernel
/// point becomes `(−1, −1)`. The normalized image `y² + a₁'xy + d³y = x³`
/// is rescaled back by dividing `a₁'` by `d`, which costs one digit.
pub fn rezk_isogeny_integral(digits: u32, t_order: usize) -> Result<RezkIsogenyCheck<TruncSeries<PadicApprox>>> {
    let one = PadicApprox::new(1, digits)?;
    let t = TruncSeries::monomial(one, 1, t_order);
    let q = |c: TruncSeries<PadicApprox>| QuotientExt::from_base(c, t.clone());
    let d = QuotientExt::generator(t.clone());
    let e = WeierstrassCurve::gamma1_3(q(t.clone()), q(t.one_like()));
    let domain = e.rescale(&d);
    let minus_one = q(TruncSeries::constant(one.neg(), t_order));
    let kernel = AffinePoint::new(minus_one.clone(), minus_one);
    let mut check = finish(domain, kernel, &d, expected_image(&t))?;
    let d3 = d.square().mul(&d);
    check.image.a1 = check.image.a1.try_div_exact(&d).ok_or(Error::NotDivisible)?;
    check.image.a3 = check.image.a3.try_div_exact(&d3).ok_or(Error::NotDivisible)?;
    Ok(check)
}

fn finish<B: Ring>(
    domain: WeierstrassCurve<QuotientExt<B>>,
    kernel: AffinePoint<QuotientExt<B>>,
    beta: &QuotientExt<B>,
    expected: WeierstrassCurve<QuotientExt<B>>,
) -> Result<RezkIsogenyCheck<B>> {
    let on_curve = domain.is_on_curve(&kernel);
    let two_torsion = two_torsion_residual(&domain, &kernel).is_zero();
    let image = normalize_gamma1_3_image(&domain, &kernel, beta)?;
    Ok(RezkIsogenyCheck { domain, kernel, on_curve, two_torsion, image, expected })
}

/// Smallest number of 2-adic digits known among the coefficients of `a`.
pub fn min_precision(a: &QuotientExt<TruncSeries<PadicApprox>>) -> u32 {
    a.coeffs()
        .iter()
        .flat_map(|s| s.coeffs().iter().map(PadicApprox::precision))
        .min()
        .unwrap_or(crate::coeffdom::MAX_PRECISION)
}
