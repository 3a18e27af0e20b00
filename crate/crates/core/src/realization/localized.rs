use alloc::vec::Vec;

use crate::coeffdom::PadicApprox;
use crate::series::LaurentSeries;

/// The three degree-0 rings attached to `x = v₁³v₂⁻¹`: `Z₂[x⁻¹]^∧` after
/// `K(1)`-localization, `Z₂⟦x⟧` after `K(2)`-localization, and
/// `Z₂((x))^∧` after both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalizedKind {
    K1Zero,
    K2Zero,
    K2K1Zero,
}

/// The variable a payload series is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XVariable {
    X,
    XInverse,
}

/// A truncated element of one of the [`LocalizedKind`] rings.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedModel {
    pub kind: LocalizedKind,
    pub variable: XVariable,
    pub payload: LaurentSeries<PadicApprox>,
}

impl LocalizedModel {
    pub fn new(kind: LocalizedKind, variable: XVariable, payload: LaurentSeries<PadicApprox>) -> Self {
        Self { kind, variable, payload }
    }

    /// Exponent of `x` carried by the `n`-th power of the payload variable.
    pub fn x_exponent(&self, n: i64) -> i64 {
        match self.variable {
            XVariable::X => n,
            XVariable::XInverse => -n,
        }
    }

    /// Terms `(x-exponent, coefficient)` that keep the payload out of
    /// `self.kind`.
    pub fn obstructions(&self) -> Vec<(i64, PadicApprox)> {
        self.payload
            .terms()
            .map(|(n, c)| (self.x_exponent(n), *c))
            .filter(|&(e, _)| match self.kind {
                LocalizedKind::K1Zero => e > 0,
                LocalizedKind::K2Zero => e < 0,
                LocalizedKind::K2K1Zero => false,
            })
            .collect()
    }

    pub fn is_member(&self) -> bool {
        self.obstructions().is_empty()
    }
}

/// Whether `e` (a series in `variable`) lies in the ring `target`: every
/// coefficient of a forbidden power of `x` vanishes mod `2^N`.
pub fn membership(e: &LaurentSeries<PadicApprox>, variable: XVariable, target: LocalizedKind) -> bool {
    LocalizedModel::new(target, variable, e.clone()).is_member()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(deg: i64, order: i64) -> LaurentSeries<PadicApprox> {
        LaurentSeries::monomial(PadicApprox::new(1, 16).unwrap(), deg, order)
    }

    #[test]
    fn single_powers() {
        assert!(membership(&mono(-1, 4), XVariable::X, LocalizedKind::K1Zero));
        assert!(!membership(&mono(1, 4), XVariable::X, LocalizedKind::K1Zero));
        assert!(membership(&mono(1, 4), XVariable::XInverse, LocalizedKind::K1Zero));
        assert!(membership(&mono(1, 4), XVariable::X, LocalizedKind::K2Zero));
        assert!(!membership(&mono(-2, 4), XVariable::X, LocalizedKind::K2Zero));
        assert!(membership(&mono(-2, 4), XVariable::X, LocalizedKind::K2K1Zero));
    }

    #[test]
    fn vanishing_coefficients_do_not_obstruct() {
        let zero_mod = LaurentSeries::monomial(PadicApprox::new(1 << 16, 17).unwrap().truncate(16), 3, 5);
        assert!(membership(&zero_mod, XVariable::X, LocalizedKind::K1Zero));
        let m = LocalizedModel::new(LocalizedKind::K1Zero, XVariable::X, mono(2, 4));
        assert_eq!(m.obstructions().len(), 1);
        assert_eq!(m.obstructions()[0].0, 2);
    }
}
