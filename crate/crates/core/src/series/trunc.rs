use alloc::vec::Vec;
use core::fmt;

use crate::coeffdom::Ring;
use crate::{Error, Result};

/// `Σ_{n<K} cₙ sⁿ + O(s^K)`; the order `K` is the number of stored
/// coefficients.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<R: Ring> {
    coeffs: Vec<R>,
    ctx: R::Ctx,
}

impl<R: Ring> TruncSeries<R> {
    pub fn zero(ctx: &R::Ctx, order: usize) -> Self {
        Self { coeffs: (0..order).map(|_| R::zero(ctx)).collect(), ctx: ctx.clone() }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let ctx = c.context();
        let mut s = Self::zero(&ctx, order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn monomial(c: R, degree: usize, order: usize) -> Self {
        let ctx = c.context();
        let mut s = Self::zero(&ctx, order);
        if degree < order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// The series variable `s` itself.
    pub fn variable(ctx: &R::Ctx, order: usize) -> Self {
        Self::monomial(R::one(ctx), 1, order)
    }

    /// Pads with zeros (or drops coefficients) to reach `order`.
    pub fn from_coeffs(ctx: &R::Ctx, mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.truncate(order);
        while coeffs.len() < order {
            coeffs.push(R::zero(ctx));
        }
        Self { coeffs, ctx: ctx.clone() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff_ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `sⁿ`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(|| R::zero(&self.ctx))
    }

    pub fn set_coeff(&mut self, n: usize, c: R) {
        if n < self.coeffs.len() {
            self.coeffs[n] = c;
        }
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = self.clone();
        s.coeffs.truncate(order);
        s
    }

    /// Treats the stored coefficients as an exact polynomial and reports it
    /// to a larger order.
    pub fn extend_exact(&self, order: usize) -> Self {
        Self::from_coeffs(&self.ctx, self.coeffs.clone(), order.max(self.order()))
    }

    pub fn map<C: Ring>(&self, ctx: &C::Ctx, f: impl Fn(&R) -> C) -> TruncSeries<C> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect(), ctx: ctx.clone() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(), ctx: self.ctx.clone() }
    }

    /// Multiplies by `s^k`; the order grows by `k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs: Vec<R> = (0..k).map(|_| R::zero(&self.ctx)).collect();
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs, ctx: self.ctx.clone() }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(n, c)| c.scale_i64(n as i64)).collect();
        Self { coeffs, ctx: self.ctx.clone() }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let k = self.order();
        if k == 0 {
            return Ok(self.clone());
        }
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NonUnitLeadingCoefficient)?;
        let mut out = Vec::with_capacity(k);
        out.push(inv0.clone());
        for n in 1..k {
            let mut acc = R::zero(&self.ctx);
            for i in 1..=n {
                acc = acc.add(&self.coeffs[i].mul(&out[n - i]));
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(Self { coeffs: out, ctx: self.ctx.clone() })
    }

    /// `self ∘ g`. With `g` of valuation `v ≥ 1` and order `L`, the result is
    /// certified modulo `s^min(K·v, L)` where `K` is the order of `self`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if g.order() > 0 && !g.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let k = self.order();
        let order = match g.valuation() {
            _ if k == 0 => 0,
            Some(v) => (k * v).min(g.order()),
            None => g.order(),
        };
        let mut acc = Self::zero(&self.ctx, order);
        if order == 0 {
            return Ok(acc);
        }
        let g = g.truncate(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }

    /// Evaluates the stored coefficients as a polynomial at `x`.
    pub fn eval_polynomial<S: Ring>(&self, x: &S, embed: impl Fn(&R) -> S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&embed(c));
        }
        acc
    }

    /// Degrees of the coefficients that differ from `other` (within the
    /// common order).
    pub fn differing_degrees(&self, other: &Self) -> Vec<usize> {
        let n = self.order().min(other.order());
        (0..n).filter(|&i| self.coeffs[i] != other.coeffs[i]).collect()
    }
}

impl<R: Ring> Ring for TruncSeries<R> {
    type Ctx = (R::Ctx, usize);

    fn context(&self) -> Self::Ctx {
        (self.ctx.clone(), self.order())
    }

    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self {
        Self::constant(R::from_i64(&ctx.0, n), ctx.1)
    }

    fn add(&self, rhs: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect();
        Self { coeffs, ctx: self.ctx.clone() }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub(b)).collect();
        Self { coeffs, ctx: self.ctx.clone() }
    }

    fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(Ring::neg).collect(), ctx: self.ctx.clone() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let k = self.order().min(rhs.order());
        let mut coeffs: Vec<R> = (0..k).map(|_| R::zero(&self.ctx)).collect();
        for (i, a) in self.coeffs.iter().take(k).enumerate() {
            for (j, b) in rhs.coeffs.iter().take(k - i).enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs, ctx: self.ctx.clone() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    fn inverse(&self) -> Option<Self> {
        TruncSeries::inverse(self).ok()
    }

    /// Divides out the constant term of the divisor coefficientwise, then
    /// inverts the remaining series (which starts with 1).
    fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        let k = self.order().min(divisor.order());
        if k == 0 {
            return Some(self.clone());
        }
        let lead = &divisor.coeffs[0];
        let unit: Vec<R> = divisor.coeffs[..k].iter().map(|c| c.try_div_exact(lead)).collect::<Option<_>>()?;
        let num: Vec<R> = self.coeffs[..k].iter().map(|c| c.try_div_exact(lead)).collect::<Option<_>>()?;
        let unit = Self { coeffs: unit, ctx: self.ctx.clone() };
        let num = Self { coeffs: num, ctx: self.ctx.clone() };
        Some(num.mul(&TruncSeries::inverse(&unit).ok()?))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·s")?,
                _ => write!(f, "{c}·s^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(s^{})", self.order())
    }
}

impl<R: Ring> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncSeries").field("coeffs", &self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffdom::{Integer, PadicApprox};
    use alloc::vec;

    fn zs(c: &[i64], order: usize) -> TruncSeries<Integer> {
        TruncSeries::from_coeffs(&(), c.iter().map(|&x| Integer::new(x)).collect(), order)
    }

    #[test]
    fn inverse_of_one_minus_ten_s() {
        let f = zs(&[1, -10], 8);
        let inv = f.inverse().unwrap();
        // geometric series oracle: 10^n
        let mut expected = vec![];
        let mut p = 1i64;
        for _ in 0..8 {
            expected.push(p);
            p *= 10;
        }
        assert_eq!(inv, zs(&expected, 8));
        assert_eq!(zs(&[1], 5).inverse().unwrap(), zs(&[1], 5));
    }

    #[test]
    fn inverse_needs_unit_constant() {
        let two_s = TruncSeries::monomial(PadicApprox::from_i128(2, 16).unwrap(), 1, 6);
        assert_eq!(two_s.inverse(), Err(Error::NonUnitLeadingCoefficient));
    }

    #[test]
    fn compose_examples() {
        let f = zs(&[3, 1, 4, 1, 5], 5);
        let s = zs(&[0, 1], 5);
        assert_eq!(f.compose(&s).unwrap(), f);
        let sq = zs(&[0, 0, 1], 6);
        let two_s = zs(&[0, 2], 6);
        assert_eq!(sq.compose(&two_s).unwrap(), zs(&[0, 0, 4], 6));
        // 1/(1-s) mod s^5 composed with s²: certified to s^min(5·2, 12) = s^10
        let geo = zs(&[1, 1, 1, 1, 1], 5);
        let r = geo.compose(&zs(&[0, 0, 1], 12)).unwrap();
        assert_eq!(r, zs(&[1, 0, 1, 0, 1, 0, 1, 0, 1, 0], 10));
    }

    #[test]
    fn compose_rejects_constant_term() {
        let f = zs(&[1, 1], 4);
        assert_eq!(f.compose(&zs(&[1, 1], 4)), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn order_bookkeeping() {
        let a = zs(&[1, 2, 3], 3);
        let b = zs(&[1, 1, 1, 1, 1], 5);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.derivative(), zs(&[2, 6], 2));
    }

    #[test]
    fn exact_division_by_content() {
        let p = |v: i128| PadicApprox::from_i128(v, 20).unwrap();
        let num = TruncSeries::from_coeffs(&(), vec![p(8), p(4)], 4);
        let den = TruncSeries::from_coeffs(&(), vec![p(4)], 4);
        let q = Ring::try_div_exact(&num, &den).unwrap();
        assert_eq!(q.coeff(0).signed(), 2);
        assert_eq!(q.coeff(1).signed(), 1);
        assert_eq!(q.coeff(0).precision(), 18);
        let odd = TruncSeries::from_coeffs(&(), vec![p(1)], 4);
        assert!(Ring::try_div_exact(&odd, &den).is_none());
    }
}
