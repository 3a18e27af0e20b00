use alloc::vec::Vec;
use core::fmt;

use super::TruncSeries;
use crate::coeffdom::Ring;
use crate::{Error, Result};

/// `Σ_{i+j<K} c_{ij} z₁ⁱ z₂ʲ + O(total degree K)`.
///
/// Storage is not symmetric: commutativity of a formal group law is
/// something to check, not something the representation assumes.
#[derive(Clone, PartialEq)]
pub struct BivarSeries<R: Ring> {
    order: usize,
    coeffs: Vec<R>,
    ctx: R::Ctx,
}

#[inline]
fn index(i: usize, j: usize) -> usize {
    let n = i + j;
    n * (n + 1) / 2 + j
}

impl<R: Ring> BivarSeries<R> {
    pub fn zero(ctx: &R::Ctx, order: usize) -> Self {
        let len = order * (order + 1) / 2;
        Self { order, coeffs: (0..len).map(|_| R::zero(ctx)).collect(), ctx: ctx.clone() }
    }

    pub fn from_fn(ctx: &R::Ctx, order: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut s = Self::zero(ctx, order);
        for n in 0..order {
            for j in 0..=n {
                s.coeffs[index(n - j, j)] = f(n - j, j);
            }
        }
        s
    }

    pub fn constant(c: R, order: usize) -> Self {
        let ctx = c.context();
        let mut s = Self::zero(&ctx, order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// `f(z₁)` viewed as a bivariate series.
    pub fn from_z1(f: &TruncSeries<R>, order: usize) -> Self {
        let order = order.min(f.order());
        Self::from_fn(f.coeff_ctx(), order, |i, j| if j == 0 { f.coeff(i) } else { R::zero(f.coeff_ctx()) })
    }

    /// `f(z₂)` viewed as a bivariate series.
    pub fn from_z2(f: &TruncSeries<R>, order: usize) -> Self {
        let order = order.min(f.order());
        Self::from_fn(f.coeff_ctx(), order, |i, j| if i == 0 { f.coeff(j) } else { R::zero(f.coeff_ctx()) })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff_ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    /// Coefficient of `z₁ⁱz₂ʲ`; zero past the truncation.
    pub fn coeff(&self, i: usize, j: usize) -> R {
        if i + j < self.order {
            self.coeffs[index(i, j)].clone()
        } else {
            R::zero(&self.ctx)
        }
    }

    /// Nonzero terms as `((i, j), c)`, ordered by total degree.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &R)> + '_ {
        (0..self.order)
            .flat_map(|n| (0..=n).map(move |j| (n - j, j)))
            .map(move |(i, j)| ((i, j), &self.coeffs[index(i, j)]))
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut s = self.clone();
        s.coeffs.truncate(order * (order + 1) / 2);
        s.order = order;
        s
    }

    /// Lowest total degree carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.terms().next().map(|((i, j), _)| i + j)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// `F(z₂, z₁)`.
    pub fn swap(&self) -> Self {
        Self::from_fn(&self.ctx, self.order, |i, j| self.coeff(j, i))
    }

    /// `F(z, z)`, known modulo `z^K`.
    pub fn diagonal(&self) -> TruncSeries<R> {
        let coeffs = (0..self.order)
            .map(|n| (0..=n).fold(R::zero(&self.ctx), |acc, j| acc.add(&self.coeffs[index(n - j, j)])))
            .collect();
        TruncSeries::from_coeffs(&self.ctx, coeffs, self.order)
    }

    /// `F(z, 0)`.
    pub fn restrict_z2_zero(&self) -> TruncSeries<R> {
        let coeffs = (0..self.order).map(|i| self.coeff(i, 0)).collect();
        TruncSeries::from_coeffs(&self.ctx, coeffs, self.order)
    }

    /// `F(0, z)`.
    pub fn restrict_z1_zero(&self) -> TruncSeries<R> {
        let coeffs = (0..self.order).map(|j| self.coeff(0, j)).collect();
        TruncSeries::from_coeffs(&self.ctx, coeffs, self.order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(&self.ctx, order, |i, j| self.coeff(i, j).add(&rhs.coeff(i, j)))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(&self.ctx, order, |i, j| self.coeff(i, j).sub(&rhs.coeff(i, j)))
    }

    pub fn neg(&self) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(Ring::neg).collect(), ctx: self.ctx.clone() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(), ctx: self.ctx.clone() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(&self.ctx, order);
        for ((i1, j1), a) in self.terms() {
            if i1 + j1 >= order {
                break;
            }
            for ((i2, j2), b) in rhs.terms() {
                if i1 + j1 + i2 + j2 >= order {
                    break;
                }
                let k = index(i1 + i2, j1 + j2);
                out.coeffs[k] = out.coeffs[k].add(&a.mul(b));
            }
        }
        out
    }

    /// Inverse of a series whose constant term is a unit.
    pub fn inverse(&self) -> Result<Self> {
        if self.order == 0 {
            return Ok(self.clone());
        }
        let c0 = self.coeffs[0].inverse().ok_or(Error::NonUnitLeadingCoefficient)?;
        // self·c0⁻¹ = 1 − h with h nilpotent modulo the truncation
        let one = Self::constant(R::one(&self.ctx), self.order);
        let h = one.sub(&self.scale(&c0));
        let mut acc = one.clone();
        for _ in 0..self.order {
            acc = one.add(&h.mul(&acc));
        }
        Ok(acc.scale(&c0))
    }

    /// `f(G)` for a univariate `f` and `G(0,0) = 0`. With `G` of total
    /// valuation `v` the result is known to total degree `min(K_f·v, K_G)`.
    pub fn compose_outer(f: &TruncSeries<R>, g: &Self) -> Result<Self> {
        if g.order > 0 && !g.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let kf = f.order();
        let order = match g.valuation() {
            _ if kf == 0 => 0,
            Some(v) => (kf * v).min(g.order),
            None => g.order,
        };
        let g = g.truncate(order);
        let mut acc = Self::zero(f.coeff_ctx(), order);
        if order == 0 {
            return Ok(acc);
        }
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }

    /// `F(g(z), h(z))` with `g(0) = h(0) = 0`.
    pub fn substitute(&self, g: &TruncSeries<R>, h: &TruncSeries<R>) -> Result<TruncSeries<R>> {
        for s in [g, h] {
            if s.order() > 0 && !s.coeff(0).is_zero() {
                return Err(Error::NonzeroConstantTerm);
            }
        }
        let v = match (g.valuation(), h.valuation()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut order = g.order().min(h.order());
        if let Some(v) = v {
            order = order.min(self.order * v);
        }
        let g = g.truncate(order);
        let h = h.truncate(order);
        let ctx = (self.ctx.clone(), order);
        let gp: Vec<TruncSeries<R>> = powers(&g, &ctx, self.order);
        let hp: Vec<TruncSeries<R>> = powers(&h, &ctx, self.order);
        let mut acc = TruncSeries::zero(&self.ctx, order);
        for ((i, j), c) in self.terms() {
            acc = acc.add(&gp[i].mul(&hp[j]).scale(c));
        }
        Ok(acc)
    }
}

fn powers<R: Ring>(g: &TruncSeries<R>, ctx: &(R::Ctx, usize), n: usize) -> Vec<TruncSeries<R>> {
    let mut out = Vec::with_capacity(n);
    let mut p = TruncSeries::one(ctx);
    for _ in 0..n {
        out.push(p.clone());
        p = p.mul(g);
    }
    out
}

/// The chord slope `(w(z₂) − w(z₁))/(z₂ − z₁)` as a bivariate series:
/// `Σₙ wₙ Σ_{i+j=n−1} z₁ⁱz₂ʲ`. Known to total degree `min(K, order(w) − 1)`.
pub fn divided_difference<R: Ring>(w: &TruncSeries<R>, order: usize) -> BivarSeries<R> {
    let order = order.min(w.order().saturating_sub(1));
    BivarSeries::from_fn(w.coeff_ctx(), order, |i, j| w.coeff(i + j + 1))
}

impl<R: Ring + fmt::Display> fmt::Display for BivarSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j), c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            match i {
                0 => {}
                1 => write!(f, "·z1")?,
                _ => write!(f, "·z1^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "·z2")?,
                _ => write!(f, "·z2^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(deg {})", self.order)
    }
}

impl<R: Ring> fmt::Debug for BivarSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BivarSeries").field("order", &self.order).field("coeffs", &self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffdom::Integer;

    fn zs(c: &[i64], order: usize) -> TruncSeries<Integer> {
        TruncSeries::from_coeffs(&(), c.iter().map(|&x| Integer::new(x)).collect(), order)
    }

    #[test]
    fn divided_difference_of_cube() {
        let w = zs(&[0, 0, 0, 1], 10);
        let l = divided_difference(&w, 8);
        for ((i, j), c) in l.terms() {
            assert_eq!(i + j, 2, "unexpected term z1^{i} z2^{j}");
            assert_eq!(*c, Integer::new(1));
        }
        assert_eq!(l.terms().count(), 3);
    }

    #[test]
    fn divided_difference_of_constant_is_zero() {
        assert!(divided_difference(&zs(&[7], 6), 5).is_zero());
    }

    #[test]
    fn divided_difference_cube_plus_t_quartic() {
        // over Z[t] modelled by t = 3
        let w = zs(&[0, 0, 0, 1, 3], 10);
        let l = divided_difference(&w, 8);
        for i in 0..=2 {
            assert_eq!(l.coeff(i, 2 - i), Integer::new(1));
        }
        for i in 0..=3 {
            assert_eq!(l.coeff(i, 3 - i), Integer::new(3));
        }
        assert_eq!(l.terms().count(), 7);
    }

    #[test]
    fn chord_identity() {
        let w = zs(&[0, 0, 0, 1, -2, 5, 1, 0, 3], 9);
        let l = divided_difference(&w, 8);
        let z1 = BivarSeries::from_z1(&zs(&[0, 1], 9), 8);
        let z2 = BivarSeries::from_z2(&zs(&[0, 1], 9), 8);
        let lhs = l.mul(&z2.sub(&z1));
        let rhs = BivarSeries::from_z2(&w, 8).sub(&BivarSeries::from_z1(&w, 8));
        assert_eq!(lhs, rhs);
        assert_eq!(l.diagonal(), w.derivative().truncate(8));
    }

    #[test]
    fn inverse_and_compose() {
        let g = BivarSeries::from_fn(&(), 6, |i, j| match (i, j) {
            (0, 0) => Integer::new(1),
            (1, 0) => Integer::new(2),
            (1, 1) => Integer::new(-1),
            _ => Integer::new(0),
        });
        let inv = g.inverse().unwrap();
        assert_eq!(g.mul(&inv), BivarSeries::constant(Integer::new(1), 6));
        let z1 = BivarSeries::from_z1(&zs(&[0, 1], 6), 6);
        let sq = zs(&[0, 0, 1], 4);
        let c = BivarSeries::compose_outer(&sq, &z1).unwrap();
        assert_eq!(c.coeff(2, 0), Integer::new(1));
        assert_eq!(c.order(), 4);
    }

    #[test]
    fn substitute_univariate() {
        // F = z1 + z2 + z1·z2, F(z, z) = 2z + z²
        let f = BivarSeries::from_fn(&(), 5, |i, j| match (i, j) {
            (1, 0) | (0, 1) | (1, 1) => Integer::new(1),
            _ => Integer::new(0),
        });
        let z = zs(&[0, 1], 5);
        assert_eq!(f.substitute(&z, &z).unwrap(), zs(&[0, 2, 1], 5));
        assert_eq!(f.diagonal(), zs(&[0, 2, 1], 5));
    }
}
