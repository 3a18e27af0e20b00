use alloc::vec::Vec;

use crate::coeffdom::{PadicApprox, Ring, MAX_PRECISION};
use crate::series::{LaurentSeries, TruncSeries};
use crate::{Error, Result};

/// Smallest 2-adic precision the pipeline accepts.
pub const MIN_PRECISION: u32 = 8;
/// Smallest `s`-order the pipeline accepts.
pub const MIN_ORDER: usize = 2;

/// The solution of `c = −1 + 4s·c³` in `Z/2^N⟦s⟧/(s^K)`, `s = t⁻³`.
#[derive(Clone, Debug, PartialEq)]
pub struct CSeries {
    c: TruncSeries<PadicApprox>,
    precision: u32,
    iterations: usize,
}

pub(crate) fn validate(precision: u32, order: usize) -> Result<()> {
    if !(MIN_PRECISION..=MAX_PRECISION).contains(&precision) {
        return Err(Error::InvalidPrecision(precision));
    }
    if order < MIN_ORDER {
        return Err(Error::OrderTooSmall { needed: MIN_ORDER, got: order });
    }
    Ok(())
}

/// Runs exactly `K` steps of `c ← −1 + 4s·c³` from `c₀ = −1`.
///
/// The map is a contraction for the `s`-adic topology (its derivative is
/// divisible by `s`), so step `n` fixes the coefficient of `sⁿ⁻¹` for good
/// and `K` steps certify the whole window.
pub fn solve_c(precision: u32, order: usize) -> Result<CSeries> {
    validate(precision, order)?;
    let minus_one = TruncSeries::constant(PadicApprox::from_i128(-1, precision)?, order);
    let four_s = TruncSeries::monomial(PadicApprox::exact(4), 1, order);
    let mut c = minus_one.clone();
    for _ in 0..order {
        c = minus_one.add(&four_s.mul(&c.pow(3)));
    }
    Ok(CSeries { c, precision, iterations: order })
}

impl CSeries {
    pub fn series(&self) -> &TruncSeries<PadicApprox> {
        &self.c
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn order(&self) -> usize {
        self.c.order()
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// `c + 1 − 4s·c³`; zero in the window for a converged solution.
    pub fn residual(&self) -> TruncSeries<PadicApprox> {
        let k = self.order();
        let four_s = TruncSeries::monomial(PadicApprox::exact(4), 1, k);
        self.c.add(&TruncSeries::constant(PadicApprox::exact(1), k)).sub(&four_s.mul(&self.c.pow(3)))
    }

    /// A copy whose stored terms are kept but whose window is cut to `order`.
    pub fn truncated(&self, order: usize) -> Self {
        Self { c: self.c.truncate(order), precision: self.precision, iterations: self.iterations }
    }

    /// `c(q³)` as a Laurent series in `q = t⁻¹`, window `[0, 3K)`.
    pub fn in_q(&self) -> LaurentSeries<PadicApprox> {
        LaurentSeries::from_trunc(&self.c).inflate(3)
    }

    /// `α = 2c/t = 2q·c(q³)`.
    pub fn alpha(&self) -> LaurentSeries<PadicApprox> {
        self.in_q().scale(&PadicApprox::exact(2)).shift(1)
    }

    /// `6c − 4c²`, whose constant term is `−10`.
    pub fn six_c_minus_four_c2(&self) -> TruncSeries<PadicApprox> {
        self.c.scale(&PadicApprox::exact(6)).sub(&self.c.square().scale(&PadicApprox::exact(4)))
    }
}

/// `α³ − tα − 2` for `α = 2c/t`, with the stored terms of `c` taken as an
/// exact polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaCheck {
    /// The residual in `q = t⁻¹`, over `[0, 3W)` with `W = 2K + 2`.
    pub residual_q: LaurentSeries<PadicApprox>,
    /// The same residual in `s`, together with any terms off the `q³`
    /// lattice (there are none, because the residual is `2(4sc³ − c − 1)`).
    pub residual_s: LaurentSeries<PadicApprox>,
    pub off_lattice: Vec<(i64, PadicApprox)>,
    /// Certified order `K` of `c`.
    pub certified_order: usize,
    /// Every coefficient of `α` is even.
    pub alpha_even: bool,
    /// `f(X) = X³ − tX − 2` has `f(0) ≡ 0 mod 2` and `f'(0) = −t` a unit, so
    /// the root `≡ 0 mod 2` is unique.
    pub hensel_unique: bool,
}

impl AlphaCheck {
    /// Lowest `s`-degree of a nonzero residual term.
    pub fn residual_valuation(&self) -> Option<i64> {
        self.residual_s.valuation()
    }

    /// The residual vanishes below `s^K`.
    pub fn vanishes_in_window(&self) -> bool {
        self.off_lattice.is_empty() && self.residual_valuation().is_none_or(|v| v >= self.certified_order as i64)
    }
}

pub fn alpha_check(c: &CSeries) -> AlphaCheck {
    let k = c.order();
    let window = 2 * k + 2;
    let exact = CSeries { c: c.c.extend_exact(window), ..c.clone() };
    let alpha = exact.alpha();
    let t_alpha = alpha.shift(-1);
    let two = LaurentSeries::monomial(PadicApprox::exact(2), 0, t_alpha.order());
    let residual_q = alpha.pow(3).sub(&t_alpha).sub(&two);
    let (residual_s, off_lattice) = residual_q.deflate(3);
    let alpha_even = c.alpha().terms().all(|(_, a)| a.valuation().is_none_or(|v| v >= 1));

    // f(0) = −2 and f'(0) = −t; t is a unit of Z₂((t⁻¹))^∧
    let f0_even = PadicApprox::exact(-2).valuation().is_some_and(|v| v >= 1);
    let t_unit = LaurentSeries::monomial(PadicApprox::exact(-1), -1, 1).inverse().is_ok();

    AlphaCheck { residual_q, residual_s, off_lattice, certified_order: k, alpha_even, hensel_unique: f0_even && t_unit }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signed(s: &TruncSeries<PadicApprox>) -> Vec<i128> {
        s.coeffs().iter().map(PadicApprox::signed).collect()
    }

    /// `c = −1 + v` with `v = −4s + 12sv − 12sv² + 4sv³`, solved degree by
    /// degree over the integers.
    fn oracle(k: usize) -> Vec<i128> {
        let mut v = alloc::vec![0i128; k];
        for n in 1..k {
            let conv = |a: &[i128], b: &[i128], m: usize| (0..=m).map(|i| a[i] * b[m - i]).sum::<i128>();
            let v2: Vec<i128> = (0..k).map(|m| conv(&v, &v, m)).collect();
            let v3: Vec<i128> = (0..k).map(|m| conv(&v2, &v, m)).collect();
            let m = n - 1;
            v[n] = if m == 0 { -4 } else { 0 } + 12 * v[m] - 12 * v2[m] + 4 * v3[m];
        }
        v[0] = -1;
        v
    }

    #[test]
    fn first_coefficients() {
        let c = solve_c(64, 6).unwrap();
        assert_eq!(signed(c.series())[..4], [-1, -4, -48, -768]);
        assert_eq!(signed(c.series()), oracle(6));
        assert!(c.residual().is_zero());
    }

    #[test]
    fn matches_integer_recursion() {
        let c = solve_c(128, 12).unwrap();
        assert_eq!(signed(c.series()), oracle(12));
    }

    #[test]
    fn coefficient_parity() {
        let c = solve_c(32, 10).unwrap();
        for (n, x) in c.series().coeffs().iter().enumerate().skip(1) {
            assert!(x.valuation().is_none_or(|v| v >= 2), "s^{n}");
        }
        assert_eq!(c.six_c_minus_four_c2().coeff(0).signed(), -10);
    }

    #[test]
    fn validation() {
        assert_eq!(solve_c(7, 4), Err(Error::InvalidPrecision(7)));
        assert_eq!(solve_c(129, 4), Err(Error::InvalidPrecision(129)));
        assert_eq!(solve_c(16, 1), Err(Error::OrderTooSmall { needed: 2, got: 1 }));
    }

    #[test]
    fn alpha_residual_default() {
        let c = solve_c(64, 16).unwrap();
        let a = alpha_check(&c);
        assert!(a.vanishes_in_window());
        assert!(a.alpha_even && a.hensel_unique);
    }

    #[test]
    fn alpha_residual_of_short_truncation() {
        let c = solve_c(64, 2).unwrap();
        assert_eq!(signed(c.series()), [-1, -4]);
        let a = alpha_check(&c);
        assert_eq!(a.residual_valuation(), Some(2));
        let lead: Vec<i128> = (2..6).map(|n| a.residual_s.coeff(n).signed()).collect();
        assert_eq!(lead, [-96, -384, -512, 0]);
        assert!(a.vanishes_in_window());
    }
}
