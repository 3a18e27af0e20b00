//! Coefficient domains.
//!
//! Every domain implements [`Ring`]. Elements carry whatever context they
//! need (precision, modulus element, truncation order) and hand it out via
//! [`Ring::context`] so that generic code can build constants of the same
//! shape.

mod integer;
mod padic;
mod quotient;
mod witt;

use core::fmt::Debug;

pub use integer::{Integer, Rational};
pub use padic::{PadicApprox, MAX_PRECISION};
pub use quotient::QuotientExt;
pub use witt::WittF4;

/// A commutative ring with exact arithmetic.
pub trait Ring: Clone + PartialEq + Debug {
    /// Data needed to build constants of this ring.
    type Ctx: Clone + PartialEq + Debug;

    fn context(&self) -> Self::Ctx;
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, if the element is a unit.
    fn inverse(&self) -> Option<Self>;

    /// The unique `q` with `q·divisor = self`, when one exists and can be
    /// computed. The default only handles unit divisors.
    fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        divisor.inverse().map(|inv| self.mul(&inv))
    }

    fn zero(ctx: &Self::Ctx) -> Self {
        Self::from_i64(ctx, 0)
    }

    fn one(ctx: &Self::Ctx) -> Self {
        Self::from_i64(ctx, 1)
    }

    fn zero_like(&self) -> Self {
        Self::zero(&self.context())
    }

    fn one_like(&self) -> Self {
        Self::one(&self.context())
    }

    fn int_like(&self, n: i64) -> Self {
        Self::from_i64(&self.context(), n)
    }

    fn scale_i64(&self, n: i64) -> Self {
        self.mul(&self.int_like(n))
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }
}
