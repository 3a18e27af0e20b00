//! Residues modulo `2^N` that remember `N`.
//!
//! A [`PadicApprox`] stands for the set of 2-adic integers congruent to its
//! value modulo `2^precision`. Arithmetic keeps the smallest precision of its
//! operands, exact division by `2^k` costs `k` digits, and integer constants
//! are created at [`MAX_PRECISION`] so they never lower the precision of the
//! data they meet.

use core::fmt;

use super::{Integer, Rational, Ring};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::ToPrimitive;

/// Largest supported number of 2-adic digits.
pub const MAX_PRECISION: u32 = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PadicApprox {
    value: u128,
    precision: u32,
}

#[inline]
fn mask(precision: u32) -> u128 {
    if precision >= 128 {
        u128::MAX
    } else {
        (1u128 << precision) - 1
    }
}

impl PadicApprox {
    /// Reduces `value` mod `2^precision`.
    pub fn new(value: u128, precision: u32) -> Result<Self> {
        if precision > MAX_PRECISION {
            return Err(Error::InvalidPrecision(precision));
        }
        Ok(Self { value: value & mask(precision), precision })
    }

    pub fn from_i128(value: i128, precision: u32) -> Result<Self> {
        Self::new(value as u128, precision)
    }

    /// An integer constant, known to full precision.
    pub fn exact(value: i64) -> Self {
        Self { value: value as i128 as u128, precision: MAX_PRECISION }
    }

    pub fn from_integer(value: &Integer, precision: u32) -> Result<Self> {
        Self::from_bigint(value.as_bigint(), precision)
    }

    fn from_bigint(value: &BigInt, precision: u32) -> Result<Self> {
        let modulus = BigInt::from(1u8) << 128usize;
        let reduced = value.mod_floor(&modulus);
        Self::new(reduced.to_u128().unwrap_or(0), precision)
    }

    /// Embeds an element of `Z_(2)` (odd denominator).
    pub fn from_rational(value: &Rational, precision: u32) -> Result<Self> {
        let num = Self::from_bigint(value.numer(), precision)?;
        let den = Self::from_bigint(value.denom(), precision)?;
        Ok(num.mul(&den.try_inverse()?))
    }

    pub fn value(&self) -> u128 {
        self.value
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Representative of least absolute value, in `[-2^(N-1), 2^(N-1))`.
    pub fn signed(&self) -> i128 {
        if self.precision == 0 {
            return 0;
        }
        let half = 1u128 << (self.precision - 1);
        if self.value >= half {
            if self.precision == 128 {
                self.value as i128
            } else {
                self.value as i128 - (1i128 << self.precision)
            }
        } else {
            self.value as i128
        }
    }

    /// Forgets digits beyond `precision` (no-op if already coarser).
    pub fn truncate(&self, precision: u32) -> Self {
        let p = self.precision.min(precision);
        Self { value: self.value & mask(p), precision: p }
    }

    /// True when the two residues agree modulo `2^bits`. Fails (returns
    /// false) if either side does not know that many digits.
    pub fn congruent(&self, other: &Self, bits: u32) -> bool {
        bits <= self.precision && bits <= other.precision && (self.value ^ other.value) & mask(bits) == 0
    }

    /// 2-adic valuation of the residue, `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        if self.value == 0 {
            None
        } else {
            Some(self.value.trailing_zeros())
        }
    }

    pub fn is_unit(&self) -> bool {
        self.precision > 0 && self.value & 1 == 1
    }

    pub fn try_inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        // Newton: x ← x(2 − a·x); a·a ≡ 1 mod 8 for odd a.
        let a = self.value;
        let mut x = a;
        for _ in 0..6 {
            x = x.wrapping_mul(2u128.wrapping_sub(a.wrapping_mul(x)));
        }
        Ok(Self { value: x & mask(self.precision), precision: self.precision })
    }

    /// Exact division by `2^k`; the result knows `k` fewer digits.
    pub fn shr_exact(&self, k: u32) -> Result<Self> {
        if k > self.precision {
            return Err(Error::NotDivisible);
        }
        if self.value & mask(k) != 0 {
            return Err(Error::NotDivisible);
        }
        let value = if k >= 128 { 0 } else { self.value >> k };
        Ok(Self { value, precision: self.precision - k })
    }
}

impl Ring for PadicApprox {
    type Ctx = ();

    fn context(&self) {}

    fn from_i64(_: &(), n: i64) -> Self {
        Self::exact(n)
    }

    fn add(&self, rhs: &Self) -> Self {
        let p = self.precision.min(rhs.precision);
        Self { value: self.value.wrapping_add(rhs.value) & mask(p), precision: p }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let p = self.precision.min(rhs.precision);
        Self { value: self.value.wrapping_sub(rhs.value) & mask(p), precision: p }
    }

    fn neg(&self) -> Self {
        Self { value: self.value.wrapping_neg() & mask(self.precision), precision: self.precision }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let p = self.precision.min(rhs.precision);
        Self { value: self.value.wrapping_mul(rhs.value) & mask(p), precision: p }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inverse(&self) -> Option<Self> {
        self.try_inverse().ok()
    }

    fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        let k = divisor.valuation()?;
        let unit = divisor.shr_exact(k).ok()?;
        let num = self.shr_exact(k).ok()?;
        Some(num.mul(&unit.try_inverse().ok()?))
    }
}

impl fmt::Debug for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod 2^{})", self.signed(), self.precision)
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

impl Default for PadicApprox {
    fn default() -> Self {
        Self::exact(0)
    }
}
