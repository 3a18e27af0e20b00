use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::modlin::{same_span, Smith, Vector};
use crate::coeffdom::{Ring, WittF4, MAX_PRECISION};
use crate::ellfgl::FormalGroupLaw;
use crate::series::TruncSeries;
use crate::{Error, Result};

/// Shape of the truncated Lubin-Tate ring `W(F₄)⟦u₁⟧[u^±]`: coefficients
/// mod `2^N`, `u₁` truncated at `u₁^K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LubinTateModel {
    precision: u32,
    order: usize,
}

impl LubinTateModel {
    pub fn new(precision: u32, order: usize) -> Result<Self> {
        if precision == 0 || precision > MAX_PRECISION {
            return Err(Error::InvalidPrecision(precision));
        }
        if order == 0 {
            return Err(Error::OrderTooSmall { needed: 1, got: 0 });
        }
        Ok(Self { precision, order })
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `c·u₁^k·u^e`.
    pub fn monomial(&self, c: WittF4, k: usize, e: i32) -> LubinTateElem {
        let series = TruncSeries::monomial(c.truncate(self.precision), k, self.order);
        LubinTateElem::from_terms(*self, [(e, series)])
    }

    pub fn constant(&self, c: WittF4) -> LubinTateElem {
        self.monomial(c, 0, 0)
    }

    pub fn omega(&self) -> LubinTateElem {
        self.constant(WittF4::omega())
    }

    pub fn u1(&self) -> LubinTateElem {
        self.monomial(WittF4::from_i64(&(), 1), 1, 0)
    }

    pub fn u_pow(&self, e: i32) -> LubinTateElem {
        self.monomial(WittF4::from_i64(&(), 1), 0, e)
    }

    fn zero_series(&self) -> TruncSeries<WittF4> {
        TruncSeries::zero(&(), self.order)
    }

    fn degree_zero_basis(&self) -> Vec<LubinTateElem> {
        (0..self.order)
            .flat_map(|k| [WittF4::from_i64(&(), 1), WittF4::omega()].map(|c| self.monomial(c, k, 0)))
            .collect()
    }

    /// Coordinates of the `u⁰` part on the basis `u₁^k, ω·u₁^k`.
    fn degree_zero_coordinates(&self, x: &LubinTateElem) -> Vector {
        let s = x.u_part(0);
        (0..self.order)
            .flat_map(|k| {
                let c = s.coeff(k);
                [c.re.value(), c.im.value()]
            })
            .collect()
    }
}

/// `Σ_e f_e(u₁)·u^e` with `f_e ∈ W(F₄)⟦u₁⟧/(2^N, u₁^K)`; `|u₁| = 0`,
/// `|u| = 2`.
#[derive(Clone)]
pub struct LubinTateElem {
    model: LubinTateModel,
    terms: BTreeMap<i32, TruncSeries<WittF4>>,
}

impl LubinTateElem {
    fn from_terms(model: LubinTateModel, terms: impl IntoIterator<Item = (i32, TruncSeries<WittF4>)>) -> Self {
        let mut out = Self { model, terms: BTreeMap::new() };
        for (e, s) in terms {
            out.insert_add(e, s);
        }
        out
    }

    fn insert_add(&mut self, e: i32, s: TruncSeries<WittF4>) {
        let slot = self.terms.entry(e).or_insert_with(|| self.model.zero_series());
        *slot = slot.add(&s);
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn model(&self) -> LubinTateModel {
        self.model
    }

    /// The coefficient of `u^e`, a series in `u₁`.
    pub fn u_part(&self, e: i32) -> TruncSeries<WittF4> {
        self.terms.get(&e).cloned().unwrap_or_else(|| self.model.zero_series())
    }

    /// `u`-exponents with nonzero coefficient.
    pub fn u_exponents(&self) -> impl Iterator<Item = i32> + '_ {
        self.terms.keys().copied()
    }

    /// Coefficientwise reduction mod 2 (coefficients in `F₄`).
    pub fn mod2(&self) -> Self {
        let terms = self.terms.iter().map(|(e, s)| {
            let r = s.map(&(), |c| c.truncate(1));
            (*e, r)
        });
        Self::from_terms(self.model, terms)
    }

    /// Drops every term divisible by `u₁`.
    pub fn mod_u1(&self) -> Self {
        let terms = self.terms.iter().map(|(e, s)| (*e, TruncSeries::constant(s.coeff(0), self.model.order)));
        Self::from_terms(self.model, terms)
    }

    /// Smallest `u₁`-exponent occurring, with the part of that exponent.
    pub fn lowest_u1_part(&self) -> Option<(usize, Vec<(i32, WittF4)>)> {
        let k = self.terms.values().filter_map(TruncSeries::valuation).min()?;
        let part = self.terms.iter().map(|(e, s)| (*e, s.coeff(k))).filter(|(_, c)| !c.is_zero()).collect();
        Some((k, part))
    }
}

impl PartialEq for LubinTateElem {
    fn eq(&self, other: &Self) -> bool {
        self.model == other.model && self.sub(other).is_zero()
    }
}

impl fmt::Debug for LubinTateElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LubinTateElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, s) in &self.terms {
            for (k, c) in s.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                parts.push(format!("({c})·u1^{k}·u^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Ring for LubinTateElem {
    type Ctx = LubinTateModel;

    fn context(&self) -> LubinTateModel {
        self.model
    }

    fn from_i64(model: &LubinTateModel, n: i64) -> Self {
        model.constant(WittF4::from_i64(&(), n))
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, s) in &rhs.terms {
            out.insert_add(*e, s.clone());
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn neg(&self) -> Self {
        Self { model: self.model, terms: self.terms.iter().map(|(e, s)| (*e, s.neg())).collect() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self { model: self.model, terms: BTreeMap::new() };
        for (e1, s1) in &self.terms {
            for (e2, s2) in &rhs.terms {
                out.insert_add(e1 + e2, s1.mul(s2));
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.values().all(Ring::is_zero)
    }

    /// Units are `u^e` times a unit series.
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, s) = self.terms.iter().next()?;
        let inv = TruncSeries::inverse(s).ok()?;
        Some(Self::from_terms(self.model, [(-e, inv)]))
    }
}

/// `ζ^j·σ^ε`, acting as `x ↦ ζ^j(σ^ε(x))`. The group is `F₄^× ⋊ Gal(F₄/F₂)`
/// with `σζσ⁻¹ = ζ²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub zeta: u8,
    pub sigma: bool,
}

impl GroupElement {
    pub const IDENTITY: Self = Self { zeta: 0, sigma: false };
    pub const ZETA: Self = Self { zeta: 1, sigma: false };
    pub const SIGMA: Self = Self { zeta: 0, sigma: true };

    pub fn all() -> [Self; 6] {
        core::array::from_fn(|i| Self { zeta: (i % 3) as u8, sigma: i >= 3 })
    }

    /// `self ∘ other`.
    pub fn compose(self, other: Self) -> Self {
        let twisted = if self.sigma { 2 * other.zeta } else { other.zeta };
        Self { zeta: (self.zeta + twisted) % 3, sigma: self.sigma ^ other.sigma }
    }

    pub fn inverse(self) -> Self {
        let zeta = if self.sigma { self.zeta } else { (3 - self.zeta) % 3 };
        Self { zeta, sigma: self.sigma }
    }

    /// `ζ` scales `u₁` by `ω` and `u` by `ω⁻¹`; `σ` is Frobenius on `W(F₄)`
    /// and fixes `u₁`, `u`.
    pub fn act(self, x: &LubinTateElem) -> LubinTateElem {
        let powers = [WittF4::from_i64(&(), 1), WittF4::omega(), WittF4::omega().square()];
        let terms = x.terms.iter().map(|(&e, s)| {
            let coeffs: Vec<WittF4> = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let c = if self.sigma { c.frobenius() } else { *c };
                    let twist = (i64::from(self.zeta) * (k as i64 - i64::from(e))).rem_euclid(3);
                    c.mul(&powers[twist as usize])
                })
                .collect();
            (e, TruncSeries::from_coeffs(&(), coeffs, s.order()))
        });
        LubinTateElem::from_terms(x.model, terms)
    }
}

/// Whether every group element fixes `x`.
pub fn is_fixed(x: &LubinTateElem) -> bool {
    GroupElement::all().iter().all(|g| g.act(x) == *x)
}

/// The degree-0 invariants computed two ways at a finite certificate `(N, K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LubinTateInvariants {
    pub precision: u32,
    pub order: usize,
    /// `k` with `u₁^k` in the expected basis (`3 | k`).
    pub expected_exponents: Vec<usize>,
    /// The image of `Σ_g g` on degree-0 elements equals the expected span.
    pub trace_route: bool,
    /// The common kernel of `ζ − 1` and `σ − 1` equals the expected span.
    pub direct_route: bool,
}

impl LubinTateInvariants {
    pub fn passed(&self) -> bool {
        self.trace_route && self.direct_route
    }
}

fn matrix_of(model: &LubinTateModel, f: impl Fn(&LubinTateElem) -> LubinTateElem) -> Vec<Vector> {
    let cols: Vec<Vector> = model.degree_zero_basis().iter().map(|b| model.degree_zero_coordinates(&f(b))).collect();
    let dim = cols.len();
    (0..dim).map(|r| cols.iter().map(|c| c[r]).collect()).collect()
}

/// Fixed points of the group on `(W(F₄)⟦u₁⟧)` mod `(2^N, u₁^K)`, compared
/// with `Z₂⟦u₁³⟧`.
///
/// The group has order 6, which is even, so the orbit sum is not an
/// idempotent. It is still onto the invariants; the trace route checks its
/// image and the direct route solves `(g − 1)x = 0` for both generators.
pub fn lubin_tate_invariants(model: &LubinTateModel) -> Result<LubinTateInvariants> {
    let (n, k) = (model.precision, model.order);
    if n < 2 {
        return Err(Error::InvalidPrecision(n));
    }
    if k < 4 {
        return Err(Error::OrderTooSmall { needed: 4, got: k });
    }
    let dim = 2 * k;
    let expected_exponents: Vec<usize> = (0..k).step_by(3).collect();
    let expected: Vec<Vector> = expected_exponents
        .iter()
        .map(|&e| {
            let mut v = alloc::vec![0u128; dim];
            v[2 * e] = 1;
            v
        })
        .collect();

    let trace = matrix_of(model, |x| GroupElement::all().iter().fold(x.zero_like(), |acc, g| acc.add(&g.act(x))));
    let image: Vec<Vector> = (0..dim).map(|c| trace.iter().map(|r| r[c]).collect()).collect();
    let trace_route = same_span(&image, &expected, dim, n);

    let minus_identity = |g: GroupElement| matrix_of(model, move |x| g.act(x).sub(x));
    let mut stacked = minus_identity(GroupElement::ZETA);
    stacked.extend(minus_identity(GroupElement::SIGMA));
    let kernel = Smith::new(&stacked, dim, n).kernel();
    let direct_route = same_span(&kernel, &expected, dim, n);

    Ok(LubinTateInvariants { precision: n, order: k, expected_exponents, trace_route, direct_route })
}

/// Linear independence of the six translates of `ω(1 + u + u²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitIndependence {
    /// Rank mod 2 of the 6 translates in `⊕_{i<3} W(F₄)·uⁱ ≅ Z₂⁶`.
    pub total_rank: usize,
    /// Rank mod 2 of the translates restricted to each `uⁱ`.
    pub degreewise_ranks: Vec<(i32, usize)>,
}

impl OrbitIndependence {
    pub fn independent_in_total(&self) -> bool {
        self.total_rank == 6
    }

    pub fn independent_degreewise(&self) -> bool {
        self.degreewise_ranks.iter().all(|&(_, r)| r == 6)
    }
}

pub fn orbit_independence(model: &LubinTateModel) -> OrbitIndependence {
    let omega = model.omega();
    let e = (0..3).fold(model.constant(WittF4::from_i64(&(), 0)), |acc, i| acc.add(&omega.mul(&model.u_pow(i))));
    let translates: Vec<LubinTateElem> = GroupElement::all().iter().map(|g| g.act(&e)).collect();
    let coords = |x: &LubinTateElem, i: i32| {
        let c = x.u_part(i).coeff(0);
        [c.re.value(), c.im.value()]
    };
    let rank_of = |degrees: &[i32]| {
        let rows: Vec<Vector> =
            translates.iter().map(|x| degrees.iter().flat_map(|&i| coords(x, i)).collect()).collect();
        let cols = 2 * degrees.len();
        Smith::new(&rows, cols, model.precision).rank_mod2()
    };
    OrbitIndependence {
        total_rank: rank_of(&[0, 1, 2]),
        degreewise_ranks: (0..3).map(|i| (i, rank_of(&[i]))).collect(),
    }
}

/// Height diagnostics of a law over the Lubin-Tate ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightReport {
    /// `[2](z) ≡ (unit)·u₁^{≤1}·z² + O(z³)` mod 2.
    pub h1: bool,
    /// `[2](z) ≡ (unit)·z⁴ + O(z⁵)` mod `(2, u₁)`.
    pub h2: bool,
}

fn is_unit_monomial(x: &LubinTateElem) -> Option<usize> {
    let (k, part) = x.lowest_u1_part()?;
    match part.as_slice() {
        [(_, c)] if c.residue() != (0, 0) => Some(k),
        _ => None,
    }
}

pub fn height_diagnostics(fgl: &FormalGroupLaw<LubinTateElem>) -> Result<HeightReport> {
    if fgl.order() < 5 {
        return Err(Error::OrderTooSmall { needed: 5, got: fgl.order() });
    }
    let two = fgl.n_series(2);
    let c = |n: usize| two.coeff(n).mod2();
    let h1 = c(1).is_zero() && is_unit_monomial(&c(2)).is_some_and(|k| k <= 1);
    let r = |n: usize| c(n).mod_u1();
    let h2 = (1..4).all(|n| r(n).is_zero()) && is_unit_monomial(&r(4)).is_some();
    Ok(HeightReport { h1, h2 })
}

/// `y² + u₁u·xy + u³·y = x³`, the universal curve pulled back along
/// `a ↦ u₁u`, `b ↦ u³`.
pub fn lubin_tate_curve(model: &LubinTateModel) -> crate::ellfgl::WeierstrassCurve<LubinTateElem> {
    crate::ellfgl::WeierstrassCurve::gamma1_3(model.u1().mul(&model.u_pow(1)), model.u_pow(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ellfgl::fgl_from_curve;

    fn model() -> LubinTateModel {
        LubinTateModel::new(8, 6).unwrap()
    }

    #[test]
    fn generator_relations() {
        let m = model();
        let (z, s) = (GroupElement::ZETA, GroupElement::SIGMA);
        assert_eq!(s.compose(z).compose(s.inverse()), z.compose(z));
        for x in [m.u1(), m.u_pow(1), m.omega(), m.u1().mul(&m.omega()).mul(&m.u_pow(-2))] {
            assert_eq!(s.act(&z.act(&s.act(&x))), z.act(&z.act(&x)), "{x}");
        }
        assert_eq!(z.act(&m.u1()), m.omega().mul(&m.u1()));
        assert_eq!(z.act(&m.u_pow(1)).mul(&m.omega()), m.u_pow(1));
        assert_eq!(s.act(&m.u1()), m.u1());
        assert_eq!(s.act(&m.omega()), m.omega().square());
    }

    #[test]
    fn action_composes() {
        let m = model();
        let x = m.u1().add(&m.omega().mul(&m.u_pow(1))).add(&m.u1().square().mul(&m.u_pow(-1)));
        for g in GroupElement::all() {
            for h in GroupElement::all() {
                assert_eq!(g.act(&h.act(&x)), g.compose(h).act(&x));
            }
            assert_eq!(g.act(&g.inverse().act(&x)), x);
        }
    }

    #[test]
    fn fixed_examples() {
        let m = model();
        assert!(is_fixed(&m.u1().pow(3)));
        assert!(!is_fixed(&m.u1()));
        assert!(!is_fixed(&m.omega().mul(&m.u1().pow(3))));
        assert!(is_fixed(&m.u_pow(3)));
    }

    #[test]
    fn invariants_both_routes() {
        for (n, k) in [(2, 4), (8, 7), (64, 10)] {
            let r = lubin_tate_invariants(&LubinTateModel::new(n, k).unwrap()).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert!(lubin_tate_invariants(&LubinTateModel::new(8, 3).unwrap()).is_err());
    }

    #[test]
    fn orbit_of_basis_element() {
        let r = orbit_independence(&model());
        assert!(r.independent_in_total());
        assert_eq!(r.degreewise_ranks, [(0, 2), (1, 2), (2, 2)]);
    }

    #[test]
    fn heights() {
        let m = model();
        let curve = fgl_from_curve(&lubin_tate_curve(&m), 6).unwrap();
        assert_eq!(height_diagnostics(&curve).unwrap(), HeightReport { h1: true, h2: true });
        let mult = FormalGroupLaw::multiplicative(&m.u_pow(1), 6);
        assert_eq!(height_diagnostics(&mult).unwrap(), HeightReport { h1: true, h2: false });
        let add = FormalGroupLaw::additive(&m, 6);
        assert_eq!(height_diagnostics(&add).unwrap(), HeightReport { h1: false, h2: false });
    }
}
