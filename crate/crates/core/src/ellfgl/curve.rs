use crate::coeffdom::Ring;
use crate::series::TruncSeries;
use crate::{Error, Result};

/// `y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆`.
#[derive(Clone, PartialEq, Debug)]
pub struct WeierstrassCurve<R: Ring> {
    pub a1: R,
    pub a2: R,
    pub a3: R,
    pub a4: R,
    pub a6: R,
}

#[derive(Clone, PartialEq, Debug)]
pub struct AffinePoint<R: Ring> {
    pub x: R,
    pub y: R,
}

impl<R: Ring> AffinePoint<R> {
    pub fn new(x: R, y: R) -> Self {
        Self { x, y }
    }
}

impl<R: Ring> WeierstrassCurve<R> {
    pub fn new(a1: R, a2: R, a3: R, a4: R, a6: R) -> Self {
        Self { a1, a2, a3, a4, a6 }
    }

    /// `y² + a·xy + b·y = x³`, the shape carrying a point of order 3 at the
    /// origin.
    pub fn gamma1_3(a: R, b: R) -> Self {
        let z = a.zero_like();
        Self { a1: a, a2: z.clone(), a3: b, a4: z.clone(), a6: z }
    }

    pub fn coefficients(&self) -> [&R; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn is_gamma1_3_form(&self) -> bool {
        self.a2.is_zero() && self.a4.is_zero() && self.a6.is_zero()
    }

    pub fn map<C: Ring>(&self, f: impl Fn(&R) -> C) -> WeierstrassCurve<C> {
        WeierstrassCurve { a1: f(&self.a1), a2: f(&self.a2), a3: f(&self.a3), a4: f(&self.a4), a6: f(&self.a6) }
    }

    /// `y² + a₁xy + a₃y − x³ − a₂x² − a₄x − a₆` at the point.
    pub fn equation_residual(&self, p: &AffinePoint<R>) -> R {
        let (x, y) = (&p.x, &p.y);
        let lhs = y.square().add(&self.a1.mul(x).mul(y)).add(&self.a3.mul(y));
        let x2 = x.square();
        let rhs = x2.mul(x).add(&self.a2.mul(&x2)).add(&self.a4.mul(x)).add(&self.a6);
        lhs.sub(&rhs)
    }

    pub fn is_on_curve(&self, p: &AffinePoint<R>) -> bool {
        self.equation_residual(p).is_zero()
    }

    /// `−P = (x, −y − a₁x − a₃)`.
    pub fn negate(&self, p: &AffinePoint<R>) -> AffinePoint<R> {
        AffinePoint { x: p.x.clone(), y: p.y.neg().sub(&self.a1.mul(&p.x)).sub(&self.a3) }
    }

    /// The isomorphic curve in coordinates `x = λ⁻²X`, `y = λ⁻³Y`, i.e.
    /// `aᵢ ↦ λⁱaᵢ`. No division is needed in this direction.
    pub fn rescale(&self, lambda: &R) -> Self {
        let l2 = lambda.square();
        let l3 = l2.mul(lambda);
        let l4 = l2.square();
        let l6 = l3.square();
        Self {
            a1: self.a1.mul(lambda),
            a2: self.a2.mul(&l2),
            a3: self.a3.mul(&l3),
            a4: self.a4.mul(&l4),
            a6: self.a6.mul(&l6),
        }
    }

    /// Image of a point under [`Self::rescale`]: `(λ²x, λ³y)`.
    pub fn rescale_point(lambda: &R, p: &AffinePoint<R>) -> AffinePoint<R> {
        let l2 = lambda.square();
        AffinePoint { x: p.x.mul(&l2), y: p.y.mul(&l2.mul(lambda)) }
    }

    /// The curve in coordinates `x = u²x' + r`, `y = u³y' + s·u²x' + t`.
    /// Fails when `u` is not invertible on the coefficients involved.
    pub fn change_coordinates(&self, u: &R, r: &R, s: &R, t: &R) -> Result<Self> {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let two = |x: &R| x.scale_i64(2);
        let three = |x: &R| x.scale_i64(3);
        let n1 = a1.add(&two(s));
        let n2 = a2.sub(&s.mul(a1)).add(&three(r)).sub(&s.square());
        let n3 = a3.add(&r.mul(a1)).add(&two(t));
        let n4 = a4
            .sub(&s.mul(a3))
            .add(&two(&r.mul(a2)))
            .sub(&t.add(&r.mul(s)).mul(a1))
            .add(&three(&r.square()))
            .sub(&two(&s.mul(t)));
        let n6 = a6
            .add(&r.mul(a4))
            .add(&r.square().mul(a2))
            .add(&r.square().mul(r))
            .sub(&t.mul(a3))
            .sub(&t.square())
            .sub(&r.mul(t).mul(a1));
        let div = |n: R, k: u32| n.try_div_exact(&u.pow(k)).ok_or(Error::NotDivisible);
        Ok(Self { a1: div(n1, 1)?, a2: div(n2, 2)?, a3: div(n3, 3)?, a4: div(n4, 4)?, a6: div(n6, 6)? })
    }

    /// Maps a point into the coordinates of [`Self::change_coordinates`].
    pub fn change_point(u: &R, r: &R, s: &R, t: &R, p: &AffinePoint<R>) -> Result<AffinePoint<R>> {
        let u2 = u.square();
        let x = p.x.sub(r).try_div_exact(&u2).ok_or(Error::NotDivisible)?;
        let y = p.y.sub(&s.mul(&p.x.sub(r))).sub(t).try_div_exact(&u2.mul(u)).ok_or(Error::NotDivisible)?;
        Ok(AffinePoint { x, y })
    }
}

/// The series `w(z) = −1/y` in the coordinate `z = −x/y`, known mod `z^K`.
///
/// Solves `w = z³ + a₁zw + a₂z²w + a₃w² + a₄zw² + a₆w³` by iterating from
/// `w₀ = z³`; every pass fixes at least one more coefficient.
pub fn expand_w<R: Ring>(curve: &WeierstrassCurve<R>, order: usize) -> Result<TruncSeries<R>> {
    if order < 3 {
        return Err(Error::OrderTooSmall { needed: 3, got: order });
    }
    let ctx = (curve.a1.context(), order);
    let z = TruncSeries::variable(&ctx.0, order);
    let z2 = z.square();
    let z3 = z2.mul(&z);
    let lift = |c: &R| TruncSeries::constant(c.clone(), order);
    let (a1, a2, a3, a4, a6) = (lift(&curve.a1), lift(&curve.a2), lift(&curve.a3), lift(&curve.a4), lift(&curve.a6));
    let lin = a1.mul(&z).add(&a2.mul(&z2));
    let quad = a3.add(&a4.mul(&z));
    let mut w = z3.clone();
    for _ in 0..order {
        let w2 = w.square();
        w = z3.add(&lin.mul(&w)).add(&quad.mul(&w2)).add(&a6.mul(&w2.mul(&w)));
    }
    Ok(w)
}

/// `w(z) − (z³ + a₁zw + a₂z²w + a₃w² + a₄zw² + a₆w³)` for a candidate `w`.
pub fn w_relation_residual<R: Ring>(curve: &WeierstrassCurve<R>, w: &TruncSeries<R>) -> TruncSeries<R> {
    let order = w.order();
    let z = TruncSeries::variable(w.coeff_ctx(), order);
    let lift = |c: &R| TruncSeries::constant(c.clone(), order);
    let z2 = z.square();
    let w2 = w.square();
    let rhs = z2
        .mul(&z)
        .add(&lift(&curve.a1).mul(&z).mul(w))
        .add(&lift(&curve.a2).mul(&z2).mul(w))
        .add(&lift(&curve.a3).mul(&w2))
        .add(&lift(&curve.a4).mul(&z).mul(&w2))
        .add(&lift(&curve.a6).mul(&w2).mul(w));
    w.sub(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffdom::Integer;

    fn zi(n: i64) -> Integer {
        Integer::new(n)
    }

    #[test]
    fn w_leading_terms_general() {
        // w = z³ + a₁z⁴ + (a₁² + a₂)z⁵ + (a₁³ + 2a₁a₂ + a₃)z⁶ + …
        let c = WeierstrassCurve::new(zi(2), zi(3), zi(5), zi(7), zi(11));
        let w = expand_w(&c, 8).unwrap();
        assert_eq!(w.coeff(0), zi(0));
        assert_eq!(w.coeff(2), zi(0));
        assert_eq!(w.coeff(3), zi(1));
        assert_eq!(w.coeff(4), zi(2));
        assert_eq!(w.coeff(5), zi(4 + 3));
        assert_eq!(w.coeff(6), zi(8 + 12 + 5));
        // a₁⁴ + 3a₁²a₂ + 3a₁a₃ + a₂² + a₄
        assert_eq!(w.coeff(7), zi(16 + 36 + 30 + 9 + 7));
        assert!(w_relation_residual(&c, &w).is_zero());
    }

    #[test]
    fn w_rejects_small_order() {
        let c = WeierstrassCurve::gamma1_3(zi(1), zi(1));
        assert_eq!(expand_w(&c, 2), Err(Error::OrderTooSmall { needed: 3, got: 2 }));
    }

    #[test]
    fn change_coordinates_round_trip() {
        let c = WeierstrassCurve::new(zi(0), zi(-1), zi(1), zi(-10), zi(-20));
        let p = AffinePoint::new(zi(5), zi(5));
        assert!(c.is_on_curve(&p));
        let (u, r, s, t) = (zi(1), zi(2), zi(-3), zi(4));
        let c2 = c.change_coordinates(&u, &r, &s, &t).unwrap();
        let p2 = WeierstrassCurve::change_point(&u, &r, &s, &t, &p).unwrap();
        assert!(c2.is_on_curve(&p2));
    }

    #[test]
    fn rescale_keeps_points_on_curve() {
        let c = WeierstrassCurve::new(zi(0), zi(-1), zi(1), zi(-10), zi(-20));
        let p = AffinePoint::new(zi(5), zi(5));
        let l = zi(3);
        assert!(c.rescale(&l).is_on_curve(&WeierstrassCurve::rescale_point(&l, &p)));
        let q = c.negate(&p);
        assert!(c.is_on_curve(&q));
    }
}
