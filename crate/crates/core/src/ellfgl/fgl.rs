use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::curve::{expand_w, WeierstrassCurve};
use crate::coeffdom::Ring;
use crate::realization::GradedPoly;
use crate::series::{divided_difference, BivarSeries, TruncSeries};
use crate::{Error, Result};

/// Range of `n` whose `[n]`-series are computed when the law is built.
const CACHED_N: core::ops::RangeInclusive<i64> = -2..=4;

/// A one-dimensional formal group law `F(z₁, z₂)` truncated at total degree
/// `K`, with its formal inverse and a table of n-series.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalGroupLaw<R: Ring> {
    law: BivarSeries<R>,
    inverse: TruncSeries<R>,
    n_series: BTreeMap<i64, TruncSeries<R>>,
    curve: Option<WeierstrassCurve<R>>,
}

impl<R: Ring> FormalGroupLaw<R> {
    /// Wraps a bivariate series; the formal inverse and the n-series table
    /// are computed here.
    pub fn from_law(law: BivarSeries<R>) -> Self {
        let inverse = solve_inverse(&law);
        let mut fgl = Self { law, inverse, n_series: BTreeMap::new(), curve: None };
        fgl.fill_cache();
        fgl
    }

    /// `z₁ + z₂`.
    pub fn additive(ctx: &R::Ctx, order: usize) -> Self {
        Self::from_law(BivarSeries::from_fn(ctx, order, |i, j| match (i, j) {
            (1, 0) | (0, 1) => R::one(ctx),
            _ => R::zero(ctx),
        }))
    }

    /// `z₁ + z₂ + c·z₁z₂`.
    pub fn multiplicative(c: &R, order: usize) -> Self {
        let ctx = c.context();
        Self::from_law(BivarSeries::from_fn(&ctx, order, |i, j| match (i, j) {
            (1, 0) | (0, 1) => R::one(&ctx),
            (1, 1) => c.clone(),
            _ => R::zero(&ctx),
        }))
    }

    fn fill_cache(&mut self) {
        let ctx = (self.law.coeff_ctx().clone(), self.order());
        let z = TruncSeries::variable(&ctx.0, ctx.1);
        let mut pos = TruncSeries::zero(&ctx.0, ctx.1);
        for n in 0..=*CACHED_N.end() {
            self.n_series.insert(n, pos.clone());
            pos = self.sum(&pos, &z);
        }
        let mut neg = TruncSeries::zero(&ctx.0, ctx.1);
        for n in (*CACHED_N.start()..0).rev() {
            neg = self.sum(&neg, &self.inverse);
            self.n_series.insert(n, neg.clone());
        }
    }

    pub fn law(&self) -> &BivarSeries<R> {
        &self.law
    }

    pub fn order(&self) -> usize {
        self.law.order()
    }

    pub fn curve(&self) -> Option<&WeierstrassCurve<R>> {
        self.curve.as_ref()
    }

    /// The formal inverse `i(z)` with `F(z, i(z)) = 0`.
    pub fn formal_inverse(&self) -> &TruncSeries<R> {
        &self.inverse
    }

    /// `F(g, h)` for series without constant term.
    pub fn sum(&self, g: &TruncSeries<R>, h: &TruncSeries<R>) -> TruncSeries<R> {
        self.law.substitute(g, h).expect("n-series have no constant term")
    }

    /// `[n](z)`: `[0] = 0`, `[n+1](z) = F([n](z), z)`, `[−n] = i([n])`.
    pub fn n_series(&self, n: i64) -> TruncSeries<R> {
        if let Some(s) = self.n_series.get(&n) {
            return s.clone();
        }
        let z = TruncSeries::variable(self.law.coeff_ctx(), self.order());
        if n > 0 {
            let (&start, base) = self.n_series.range(..n).next_back().expect("cache holds 0");
            let mut acc = base.clone();
            for _ in start..n {
                acc = self.sum(&acc, &z);
            }
            acc
        } else {
            let (&start, base) = self.n_series.range(n + 1..).next().expect("cache holds 0");
            let mut acc = base.clone();
            for _ in n..start {
                acc = self.sum(&acc, &self.inverse);
            }
            acc
        }
    }

    /// Applies a ring homomorphism to every coefficient.
    pub fn map<C: Ring>(&self, ctx: &C::Ctx, f: impl Fn(&R) -> C) -> FormalGroupLaw<C> {
        let law = BivarSeries::from_fn(ctx, self.order(), |i, j| f(&self.law.coeff(i, j)));
        let mut out = FormalGroupLaw::from_law(law);
        out.curve = self.curve.as_ref().map(|c| c.map(&f));
        out
    }

    /// Coefficients of `F(z, 0) − z` and `F(0, z) − z` that fail to vanish.
    pub fn unitality_defects(&self) -> Vec<(usize, usize)> {
        let ctx = self.law.coeff_ctx();
        let z = TruncSeries::variable(ctx, self.order());
        let mut out = Vec::new();
        for n in self.law.restrict_z2_zero().differing_degrees(&z) {
            out.push((n, 0));
        }
        for n in self.law.restrict_z1_zero().differing_degrees(&z) {
            out.push((0, n));
        }
        out
    }

    /// Monomials `z₁ⁱz₂ʲ` where `F(z₁,z₂)` and `F(z₂,z₁)` differ.
    pub fn commutativity_defects(&self) -> Vec<(usize, usize)> {
        let swapped = self.law.swap();
        (0..self.order())
            .flat_map(|n| (0..=n).map(move |j| (n - j, j)))
            .filter(|&(i, j)| self.law.coeff(i, j) != swapped.coeff(i, j))
            .collect()
    }

    /// Nonzero coefficients of `F(F(z₁,z₂),z₃) − F(z₁,F(z₂,z₃))` below total
    /// degree `K`, which is where both sides are certified.
    pub fn associativity_defects(&self) -> Vec<[usize; 3]> {
        let k = self.order();
        let f = Tri::from_law(&self.law, [0, 1]);
        let g = Tri::from_law(&self.law, [1, 2]);
        let z1 = Tri::var(self.law.coeff_ctx(), 0, k);
        let z3 = Tri::var(self.law.coeff_ctx(), 2, k);
        let left = Tri::compose(&self.law, &f, &z3);
        let right = Tri::compose(&self.law, &z1, &g);
        left.sub(&right).support()
    }

    /// `F(z, i(z))` below `z^K`; vanishes for a valid inverse.
    pub fn inverse_residual(&self) -> TruncSeries<R> {
        let z = TruncSeries::variable(self.law.coeff_ctx(), self.order());
        self.sum(&z, &self.inverse)
    }
}

/// Solves `F(z, y) = 0` for `y = −z + …` by fixed-point iteration on
/// `y = −z − Σ_{i+j≥2} c_{ij} zⁱyʲ`.
fn solve_inverse<R: Ring>(law: &BivarSeries<R>) -> TruncSeries<R> {
    let ctx = law.coeff_ctx();
    let k = law.order();
    let z = TruncSeries::variable(ctx, k);
    let mut y = z.neg();
    for _ in 0..k {
        // F(z, y) − (z + y) is the nonlinear part
        let full = law.substitute(&z, &y).expect("no constant terms");
        let nonlinear = full.sub(&z).sub(&y);
        y = z.neg().sub(&nonlinear);
    }
    y
}

/// The formal group law of `curve` in the coordinate `z = −x/y`, known to
/// total degree `K`.
///
/// The chord through `z₁`, `z₂` has slope `λ = (w(z₂) − w(z₁))/(z₂ − z₁)` and
/// intercept `ν = w(z₁) − λz₁`; its third intersection with the curve is
///
/// `z₃ = −z₁ − z₂ − (a₁λ + a₃λ² + a₂ν + 2a₄λν + 3a₆λ²ν)/(1 + a₂λ + a₄λ² + a₆λ³)`
///
/// (the sum of the three roots of the cubic in `z` cut out by the chord)
///
/// and `F(z₁, z₂) = i(z₃)` with `i(z) = −z/(1 − a₁z − a₃w(z))`.
pub fn fgl_from_curve<R: Ring>(curve: &WeierstrassCurve<R>, order: usize) -> Result<FormalGroupLaw<R>> {
    if order < 3 {
        return Err(Error::OrderTooSmall { needed: 3, got: order });
    }
    // one spare degree for the slope, another for the intercept
    let work = order + 1;
    let ctx = curve.a1.context();
    let w = expand_w(curve, work + 1)?;
    let lambda = divided_difference(&w, work);
    let z = TruncSeries::variable(&ctx, work);
    let z1 = BivarSeries::from_z1(&z, work);
    let z2 = BivarSeries::from_z2(&z, work);
    let nu = BivarSeries::from_z1(&w, work).sub(&lambda.mul(&z1));

    let c = |r: &R| BivarSeries::constant(r.clone(), work);
    let (a1, a2, a3, a4, a6) = (c(&curve.a1), c(&curve.a2), c(&curve.a3), c(&curve.a4), c(&curve.a6));
    let l2 = lambda.mul(&lambda);
    let l3 = l2.mul(&lambda);
    let num = a1
        .mul(&lambda)
        .add(&a3.mul(&l2))
        .add(&a2.mul(&nu))
        .add(&a4.mul(&lambda).mul(&nu).scale(&ctx_int(&ctx, 2)))
        .add(&a6.mul(&l2).mul(&nu).scale(&ctx_int(&ctx, 3)));
    let den = BivarSeries::constant(R::one(&ctx), work).add(&a2.mul(&lambda)).add(&a4.mul(&l2)).add(&a6.mul(&l3));
    let z3 = z1.neg().sub(&z2).sub(&num.mul(&den.inverse()?));

    let inverse = curve_inverse(curve, &w.truncate(work))?;
    let law = BivarSeries::compose_outer(&inverse, &z3)?.truncate(order);
    let mut fgl =
        FormalGroupLaw { law, inverse: inverse.truncate(order), n_series: BTreeMap::new(), curve: Some(curve.clone()) };
    fgl.fill_cache();
    Ok(fgl)
}

fn ctx_int<R: Ring>(ctx: &R::Ctx, n: i64) -> R {
    R::from_i64(ctx, n)
}

/// `i(z) = −z/(1 − a₁z − a₃w(z))`, the `z`-coordinate of `−P`.
fn curve_inverse<R: Ring>(curve: &WeierstrassCurve<R>, w: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    let k = w.order();
    let ctx = w.coeff_ctx();
    let z = TruncSeries::variable(ctx, k);
    let den = TruncSeries::one(&(ctx.clone(), k)).sub(&z.scale(&curve.a1)).sub(&w.scale(&curve.a3));
    Ok(z.neg().mul(&den.inverse()?))
}

/// `[n](z)` for `F`, certified to the order of `F`.
pub fn n_series<R: Ring>(fgl: &FormalGroupLaw<R>, n: i64) -> TruncSeries<R> {
    fgl.n_series(n)
}

/// The residues of `v₁` and `v₂` read off the 2-series of a law over
/// `Z_(2)[a,b]`: `v₁` is the `z²`-coefficient mod 2 and `v₂` the
/// `z⁴`-coefficient mod `(2, v₁)`.
pub fn residual_v1_v2(fgl: &FormalGroupLaw<GradedPoly>) -> Result<(GradedPoly, GradedPoly)> {
    if fgl.order() < 5 {
        return Err(Error::OrderTooSmall { needed: 5, got: fgl.order() });
    }
    let two = fgl.n_series(2);
    let v1 = two.coeff(2).mod2();
    let v2 = two.coeff(4).reduce_mod_two_and(&v1);
    Ok((v1, v2))
}

/// Trivariate truncated polynomials, only used for the associativity check.
#[derive(Clone)]
struct Tri<R: Ring> {
    order: usize,
    terms: BTreeMap<[usize; 3], R>,
    ctx: R::Ctx,
}

impl<R: Ring> Tri<R> {
    fn var(ctx: &R::Ctx, slot: usize, order: usize) -> Self {
        let mut e = [0; 3];
        e[slot] = 1;
        let mut terms = BTreeMap::new();
        if order > 1 {
            terms.insert(e, R::one(ctx));
        }
        Self { order, terms, ctx: ctx.clone() }
    }

    fn one(ctx: &R::Ctx, order: usize) -> Self {
        let mut terms = BTreeMap::new();
        if order > 0 {
            terms.insert([0; 3], R::one(ctx));
        }
        Self { order, terms, ctx: ctx.clone() }
    }

    /// `F(z_{slots[0]}, z_{slots[1]})`.
    fn from_law(law: &BivarSeries<R>, slots: [usize; 2]) -> Self {
        let mut terms = BTreeMap::new();
        for ((i, j), c) in law.terms() {
            let mut e = [0; 3];
            e[slots[0]] += i;
            e[slots[1]] += j;
            terms.insert(e, c.clone());
        }
        Self { order: law.order(), terms, ctx: law.coeff_ctx().clone() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut terms: BTreeMap<[usize; 3], R> = BTreeMap::new();
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                if e.iter().sum::<usize>() >= order {
                    continue;
                }
                let p = a.mul(b);
                let slot = terms.entry(e).or_insert_with(|| R::zero(&self.ctx));
                *slot = slot.add(&p);
            }
        }
        Self { order, terms, ctx: self.ctx.clone() }
    }

    fn add_scaled(&mut self, rhs: &Self, c: &R) {
        for (e, v) in &rhs.terms {
            if e.iter().sum::<usize>() >= self.order {
                continue;
            }
            let slot = self.terms.entry(*e).or_insert_with(|| R::zero(&self.ctx));
            *slot = slot.add(&v.mul(c));
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.order = self.order.min(rhs.order);
        out.add_scaled(rhs, &R::from_i64(&self.ctx, -1));
        out
    }

    /// `F(G, H)` with `G`, `H` trivariate and without constant term.
    fn compose(law: &BivarSeries<R>, g: &Self, h: &Self) -> Self {
        let k = law.order().min(g.order).min(h.order);
        let ctx = &g.ctx;
        let mut gp = Vec::with_capacity(k);
        let mut hp = Vec::with_capacity(k);
        let (mut pg, mut ph) = (Self::one(ctx, k), Self::one(ctx, k));
        for _ in 0..k {
            gp.push(pg.clone());
            hp.push(ph.clone());
            pg = pg.mul(g);
            ph = ph.mul(h);
        }
        let mut out = Self { order: k, terms: BTreeMap::new(), ctx: ctx.clone() };
        for ((i, j), c) in law.terms() {
            out.add_scaled(&gp[i].mul(&hp[j]), c);
        }
        out
    }

    fn support(&self) -> Vec<[usize; 3]> {
        self.terms.iter().filter(|(_, c)| !c.is_zero()).map(|(e, _)| *e).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffdom::Integer;

    fn zi(n: i64) -> Integer {
        Integer::new(n)
    }

    fn general() -> WeierstrassCurve<Integer> {
        WeierstrassCurve::new(zi(2), zi(3), zi(5), zi(7), zi(11))
    }

    #[test]
    fn low_degree_terms_match_closed_forms() {
        let (a1, a2, a3) = (2, 3, 5);
        let f = fgl_from_curve(&general(), 5).unwrap();
        let law = f.law();
        assert_eq!(law.coeff(1, 0), zi(1));
        assert_eq!(law.coeff(0, 1), zi(1));
        assert_eq!(law.coeff(2, 0), zi(0));
        assert_eq!(law.coeff(1, 1), zi(-a1));
        assert_eq!(law.coeff(2, 1), zi(-a2));
        assert_eq!(law.coeff(1, 2), zi(-a2));
        assert_eq!(law.coeff(3, 1), zi(-2 * a3));
        assert_eq!(law.coeff(2, 2), zi(a1 * a2 - 3 * a3));
        assert_eq!(law.coeff(1, 3), zi(-2 * a3));
        assert_eq!(law.coeff(4, 0), zi(0));

        let two = f.n_series(2);
        assert_eq!(two.coeffs(), &[zi(0), zi(2), zi(-a1), zi(-2 * a2), zi(a1 * a2 - 7 * a3)]);
        let inv = f.formal_inverse();
        assert_eq!(inv.coeffs(), &[zi(0), zi(-1), zi(-a1), zi(-a1 * a1), zi(-(a1 * a1 * a1 + a3))]);
    }

    #[test]
    fn law_axioms_for_general_curve() {
        let f = fgl_from_curve(&general(), 8).unwrap();
        assert!(f.unitality_defects().is_empty());
        assert!(f.commutativity_defects().is_empty());
        assert!(f.associativity_defects().is_empty());
        assert!(f.inverse_residual().is_zero());
        assert_eq!(&f.n_series(-1), f.formal_inverse());
    }

    #[test]
    fn inverse_from_law_agrees_with_curve_inverse() {
        let f = fgl_from_curve(&general(), 8).unwrap();
        let g = FormalGroupLaw::from_law(f.law().clone());
        assert_eq!(g.formal_inverse(), f.formal_inverse());
        assert_eq!(g.n_series(3), f.n_series(3));
    }

    #[test]
    fn n_series_additivity() {
        let f = fgl_from_curve(&general(), 7).unwrap();
        for m in -2..=3 {
            for n in -2..=3 {
                let lhs = f.n_series(m + n);
                let rhs = f.sum(&f.n_series(m), &f.n_series(n));
                assert_eq!(lhs, rhs, "[{m}] + [{n}]");
            }
        }
        assert_eq!(f.n_series(7), f.sum(&f.n_series(4), &f.n_series(3)));
        assert_eq!(f.n_series(-5), f.sum(&f.n_series(-2), &f.n_series(-3)));
    }

    #[test]
    fn gamma1_3_residues() {
        let e = WeierstrassCurve::gamma1_3(GradedPoly::a(), GradedPoly::b());
        let f = fgl_from_curve(&e, 6).unwrap();
        assert_eq!(f.law().coeff(1, 1), GradedPoly::a().neg());
        let (v1, v2) = residual_v1_v2(&f).unwrap();
        assert_eq!(v1, GradedPoly::a());
        assert_eq!(v2, GradedPoly::b());
        let small = fgl_from_curve(&e, 4).unwrap();
        assert_eq!(residual_v1_v2(&small), Err(Error::OrderTooSmall { needed: 5, got: 4 }));
    }

    #[test]
    fn additive_and_multiplicative_laws() {
        let add = FormalGroupLaw::<GradedPoly>::additive(&(), 6);
        let (v1, _) = residual_v1_v2(&add).unwrap();
        assert!(v1.is_zero());
        let two = add.n_series(2);
        assert_eq!(two.coeff(1), GradedPoly::constant(2));
        assert!(two.coeff(2).is_zero());

        let mul = FormalGroupLaw::multiplicative(&zi(1), 8);
        // [n](z) = (1+z)^n − 1
        assert_eq!(mul.n_series(2).coeffs()[..3], [zi(0), zi(2), zi(1)]);
        assert_eq!(mul.formal_inverse().coeffs()[..4], [zi(0), zi(-1), zi(1), zi(-1)]);
        assert!(mul.associativity_defects().is_empty());
    }

    #[test]
    fn rejects_tiny_order() {
        assert_eq!(fgl_from_curve(&general(), 2).unwrap_err(), Error::OrderTooSmall { needed: 3, got: 2 });
    }
}
