//! `W(F₄) = Z₂[ω]/(ω² + ω + 1)` truncated mod `2^N`.
//!
//! `ω` is the Teichmüller lift of a generator of `F₄^×`, so it is also the
//! root of unity `ζ` used by the Lubin-Tate group action. Frobenius sends
//! `ω` to `ω² = −1 − ω`.

use core::fmt;

use super::{PadicApprox, Ring};
use crate::Result;

/// `re + im·ω`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WittF4 {
    pub re: PadicApprox,
    pub im: PadicApprox,
}

impl WittF4 {
    pub fn new(re: PadicApprox, im: PadicApprox) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64, precision: u32) -> Result<Self> {
        Ok(Self {
            re: PadicApprox::from_i128(re.into(), precision)?,
            im: PadicApprox::from_i128(im.into(), precision)?,
        })
    }

    pub fn from_padic(re: PadicApprox) -> Self {
        Self { re, im: re.zero_like() }
    }

    /// The Teichmüller lift `ζ = ω`.
    pub fn omega() -> Self {
        Self { re: PadicApprox::exact(0), im: PadicApprox::exact(1) }
    }

    pub fn precision(&self) -> u32 {
        self.re.precision().min(self.im.precision())
    }

    pub fn truncate(&self, precision: u32) -> Self {
        Self { re: self.re.truncate(precision), im: self.im.truncate(precision) }
    }

    /// The Galois automorphism: `σ(a + bω) = (a − b) − bω`.
    pub fn frobenius(&self) -> Self {
        Self { re: self.re.sub(&self.im), im: self.im.neg() }
    }

    /// `x·σ(x) = a² − ab + b²`.
    pub fn norm(&self) -> PadicApprox {
        self.re.square().sub(&self.re.mul(&self.im)).add(&self.im.square())
    }

    /// True when the element lies in `Z₂` (mod `2^N`).
    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn try_inverse(&self) -> Result<Self> {
        let n = self.norm().try_inverse()?;
        let conj = self.frobenius();
        Ok(Self { re: conj.re.mul(&n), im: conj.im.mul(&n) })
    }

    /// Residue in `F₄ = W(F₄)/2`, as `(re mod 2, im mod 2)`.
    pub fn residue(&self) -> (u8, u8) {
        ((self.re.value() & 1) as u8, (self.im.value() & 1) as u8)
    }
}

impl Ring for WittF4 {
    type Ctx = ();

    fn context(&self) {}

    fn from_i64(_: &(), n: i64) -> Self {
        Self { re: PadicApprox::exact(n), im: PadicApprox::exact(0) }
    }

    fn add(&self, rhs: &Self) -> Self {
        Self { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }

    fn neg(&self) -> Self {
        Self { re: self.re.neg(), im: self.im.neg() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
        let bd = self.im.mul(&rhs.im);
        Self { re: self.re.mul(&rhs.re).sub(&bd), im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)).sub(&bd) }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        self.try_inverse().ok()
    }

    fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        // q = x·σ(y) / N(y)
        let num = self.mul(&divisor.frobenius());
        let n = divisor.norm();
        Some(Self { re: num.re.try_div_exact(&n)?, im: num.im.try_div_exact(&n)? })
    }
}

impl fmt::Debug for WittF4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}ω (mod 2^{})", self.re.signed(), self.im.signed(), self.precision())
    }
}

impl fmt::Display for WittF4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}ω", self.im),
            _ => write!(f, "{}{:+}ω", self.re, self.im.signed()),
        }
    }
}
