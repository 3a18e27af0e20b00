use alloc::vec::Vec;
use core::fmt;

use super::TruncSeries;
use crate::coeffdom::Ring;
use crate::{Error, Result};

/// `Σ_{lo ≤ n < K} cₙ qⁿ + O(q^K)` with `lo` possibly negative.
#[derive(Clone, PartialEq)]
pub struct LaurentSeries<R: Ring> {
    lo: i64,
    coeffs: Vec<R>,
    ctx: R::Ctx,
}

impl<R: Ring> LaurentSeries<R> {
    /// Coefficients for degrees `lo, lo+1, …`; the order is `lo + len`.
    pub fn from_coeffs(ctx: &R::Ctx, lo: i64, coeffs: Vec<R>) -> Self {
        Self { lo, coeffs, ctx: ctx.clone() }
    }

    pub fn zero(ctx: &R::Ctx, lo: i64, order: i64) -> Self {
        let len = (order - lo).max(0) as usize;
        Self { lo, coeffs: (0..len).map(|_| R::zero(ctx)).collect(), ctx: ctx.clone() }
    }

    pub fn monomial(c: R, degree: i64, order: i64) -> Self {
        let ctx = c.context();
        let mut s = Self::zero(&ctx, degree, order);
        if degree < order {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn from_trunc(f: &TruncSeries<R>) -> Self {
        Self { lo: 0, coeffs: f.coeffs().to_vec(), ctx: f.coeff_ctx().clone() }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Exclusive upper bound of the known window.
    pub fn order(&self) -> i64 {
        self.lo + self.coeffs.len() as i64
    }

    pub fn coeff_ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    /// Coefficient of `qⁿ`; zero outside the stored window.
    pub fn coeff(&self, n: i64) -> R {
        if n < self.lo {
            return R::zero(&self.ctx);
        }
        self.coeffs.get((n - self.lo) as usize).cloned().unwrap_or_else(|| R::zero(&self.ctx))
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms().next().map(|(n, _)| n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn map<C: Ring>(&self, ctx: &C::Ctx, f: impl Fn(&R) -> C) -> LaurentSeries<C> {
        LaurentSeries { lo: self.lo, coeffs: self.coeffs.iter().map(f).collect(), ctx: ctx.clone() }
    }

    /// Restricts the window to `[lo, order)`.
    pub fn truncate(&self, order: i64) -> Self {
        let mut s = self.clone();
        s.coeffs.truncate((order - self.lo).max(0) as usize);
        s
    }

    /// Treats the stored terms as exact and reports them to a larger order.
    pub fn extend_exact(&self, order: i64) -> Self {
        let mut s = self.clone();
        while s.order() < order {
            s.coeffs.push(R::zero(&self.ctx));
        }
        s
    }

    /// Re-indexes so the window starts at `lo` (which must not exceed the
    /// current start, or only drop zero terms).
    fn with_lo(&self, lo: i64) -> Self {
        let mut s = self.clone();
        if lo < s.lo {
            let pad = (s.lo - lo) as usize;
            let mut coeffs: Vec<R> = (0..pad).map(|_| R::zero(&self.ctx)).collect();
            coeffs.append(&mut s.coeffs);
            s.coeffs = coeffs;
            s.lo = lo;
        }
        s
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.add(b))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.sub(b))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let lo = self.lo.min(rhs.lo);
        let order = self.order().min(rhs.order());
        let a = self.with_lo(lo);
        let b = rhs.with_lo(lo);
        let len = (order - lo).max(0) as usize;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).take(len).map(|(x, y)| f(x, y)).collect();
        Self { lo, coeffs, ctx: self.ctx.clone() }
    }

    pub fn neg(&self) -> Self {
        Self { lo: self.lo, coeffs: self.coeffs.iter().map(Ring::neg).collect(), ctx: self.ctx.clone() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self { lo: self.lo, coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(), ctx: self.ctx.clone() }
    }

    /// Product. Each factor is `q^lo·(known part + O(q^(K − lo)))`, so the
    /// result is known up to `min(lo₁ + K₂, lo₂ + K₁)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let lo = self.lo + rhs.lo;
        let order = (self.lo + rhs.order()).min(rhs.lo + self.order());
        let len = (order - lo).max(0) as usize;
        let mut coeffs: Vec<R> = (0..len).map(|_| R::zero(&self.ctx)).collect();
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { lo, coeffs, ctx: self.ctx.clone() }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { lo: self.lo + k, coeffs: self.coeffs.clone(), ctx: self.ctx.clone() }
    }

    /// Inverse, obtained by factoring out the lowest nonzero monomial
    /// `c·q^v` (with `c` a unit) and inverting the remaining power series.
    pub fn inverse(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::NonUnitLeadingCoefficient)?;
        let start = (v - self.lo) as usize;
        let unit_part = TruncSeries::from_coeffs(&self.ctx, self.coeffs[start..].to_vec(), self.coeffs.len() - start);
        let inv = unit_part.inverse()?;
        Ok(Self { lo: -v, coeffs: inv.coeffs().to_vec(), ctx: self.ctx.clone() })
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            let relative = (self.order() - self.lo).max(0);
            return Self::monomial(R::one(&self.ctx), 0, relative);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Integer power, negative exponents through [`Self::inverse`].
    pub fn powi(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// Substitutes `q ↦ q^k` (`k ≥ 1`).
    pub fn inflate(&self, k: u32) -> Self {
        let k = i64::from(k.max(1));
        let lo = self.lo * k;
        let len = ((self.order() - self.lo) * k) as usize;
        let mut coeffs: Vec<R> = (0..len).map(|_| R::zero(&self.ctx)).collect();
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        Self { lo, coeffs, ctx: self.ctx.clone() }
    }

    /// Rewrites in the variable `y = q^k`. Nonzero terms whose degree is not
    /// a multiple of `k` cannot be expressed and are returned separately.
    pub fn deflate(&self, k: u32) -> (Self, Vec<(i64, R)>) {
        let k = i64::from(k.max(1));
        let lo = self.lo.div_euclid(k) + i64::from(self.lo.rem_euclid(k) != 0);
        let order = (self.order() + k - 1).div_euclid(k);
        let mut out = Self::zero(&self.ctx, lo, order);
        let mut off_lattice = Vec::new();
        for (n, c) in (self.lo..).zip(&self.coeffs) {
            if n.rem_euclid(k) == 0 {
                let m = n / k;
                if m < order {
                    out.coeffs[(m - lo) as usize] = c.clone();
                }
            } else if !c.is_zero() {
                off_lattice.push((n, c.clone()));
            }
        }
        (out, off_lattice)
    }

    /// Terms of negative degree.
    pub fn principal_part(&self) -> Vec<(i64, R)> {
        self.terms().filter(|(n, _)| *n < 0).map(|(n, c)| (n, c.clone())).collect()
    }

    /// The part of nonnegative degree, as a power series of the same order.
    pub fn nonnegative_part(&self) -> TruncSeries<R> {
        let order = self.order().max(0) as usize;
        let coeffs = (0..order as i64).map(|n| self.coeff(n)).collect();
        TruncSeries::from_coeffs(&self.ctx, coeffs, order)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·q")?,
                _ => write!(f, "{c}·q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

impl<R: Ring> fmt::Debug for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LaurentSeries").field("lo", &self.lo).field("coeffs", &self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffdom::{Integer, PadicApprox};
    use alloc::vec;

    fn ls(lo: i64, c: &[i64]) -> LaurentSeries<Integer> {
        LaurentSeries::from_coeffs(&(), lo, c.iter().map(|&x| Integer::new(x)).collect())
    }

    #[test]
    fn inverse_factors_lowest_monomial() {
        // q⁻²(1 − 10q³) has inverse q²(1 + 10q³ + 100q⁶ + …)
        let f = ls(-2, &[1, 0, 0, -10, 0, 0, 0, 0, 0]);
        let inv = f.inverse().unwrap();
        assert_eq!(inv.lo(), 2);
        assert_eq!(inv.coeff(2), Integer::new(1));
        assert_eq!(inv.coeff(5), Integer::new(10));
        assert_eq!(inv.coeff(8), Integer::new(100));
        let prod = f.mul(&inv);
        assert_eq!(prod.lo(), 0);
        assert_eq!(prod.coeff(0), Integer::new(1));
        assert!(prod.terms().all(|(n, _)| n == 0));
        assert_eq!(ls(0, &[1]).inverse().unwrap(), ls(0, &[1]));
    }

    #[test]
    fn inverse_skips_leading_zeros() {
        let f = ls(-3, &[0, 0, 1, 5]);
        let inv = f.inverse().unwrap();
        assert_eq!(inv.lo(), 1);
        assert_eq!(inv.order(), 3);
    }

    #[test]
    fn inverse_rejects_non_unit() {
        let two = PadicApprox::from_i128(2, 16).unwrap();
        let f = LaurentSeries::monomial(two, 1, 6);
        assert_eq!(f.inverse(), Err(Error::NonUnitLeadingCoefficient));
    }

    #[test]
    fn window_bookkeeping() {
        let a = ls(-1, &[1, 2, 3]); // known below q^2
        let b = ls(0, &[1, 1, 1, 1]); // known below q^4
        let p = a.mul(&b);
        assert_eq!(p.lo(), -1);
        assert_eq!(p.order(), 2);
        let s = a.add(&b);
        assert_eq!(s.lo(), -1);
        assert_eq!(s.order(), 2);
        assert_eq!(s.coeff(0), Integer::new(3));
    }

    #[test]
    fn deflate_reports_off_lattice_terms() {
        let f = ls(0, &[1, 0, 0, 7, 5, 0, 2]);
        let (g, off) = f.deflate(3);
        assert_eq!(g.coeff(0), Integer::new(1));
        assert_eq!(g.coeff(1), Integer::new(7));
        assert_eq!(g.coeff(2), Integer::new(2));
        assert_eq!(g.order(), 3);
        assert_eq!(off, vec![(4, Integer::new(5))]);
        assert_eq!(g.inflate(3).deflate(3).0, g);
    }

    #[test]
    fn zero_residues_keep_their_precision() {
        let p = |v: i128| PadicApprox::from_i128(v, 8).unwrap();
        let f = LaurentSeries::from_coeffs(&(), 0, vec![p(3), p(0), p(256), p(5)]);
        let (g, off) = f.deflate(1);
        assert!(off.is_empty());
        assert_eq!(g.coeff(2).precision(), 8);
        let sq = f.mul(&f);
        assert_eq!(sq.coeff(3).precision(), 8);
    }

    #[test]
    fn powi_negative() {
        let f = ls(-2, &[1, 0, 0, 3, 0, 0]);
        let cube_inv = f.powi(-3).unwrap();
        assert_eq!(cube_inv.lo(), 6);
        assert_eq!(cube_inv.coeff(6), Integer::new(1));
        assert_eq!(cube_inv.coeff(9), Integer::new(-9));
    }
}
