//! Arbitrary-precision integers and rationals.
//!
//! [`Rational`] is only used where 2 has to be inverted (the cubic extension
//! in which `d` becomes a unit); 2-adic data goes through `PadicApprox`.

use core::fmt;

use super::Ring;
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Integer(BigInt);

impl Integer {
    pub fn new(n: i64) -> Self {
        Self(BigInt::from(n))
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn is_even(&self) -> bool {
        self.0.is_even()
    }

    /// Non-negative representative mod 2.
    pub fn mod2(&self) -> u8 {
        u8::from(self.0.is_odd())
    }
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Self(v)
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Self::new(v)
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for Integer {
    type Ctx = ();

    fn context(&self) {}

    fn from_i64(_: &(), n: i64) -> Self {
        Self::new(n)
    }

    fn add(&self, rhs: &Self) -> Self {
        Self(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self(&self.0 - &rhs.0)
    }

    fn neg(&self) -> Self {
        Self(-&self.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self(&self.0 * &rhs.0)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        (self.0.abs().is_one()).then(|| self.clone())
    }

    fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.0.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then_some(Self(q))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Self(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<Integer> for Rational {
    fn from(v: Integer) -> Self {
        Self(BigRational::from_integer(v.0))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for Rational {
    type Ctx = ();

    fn context(&self) {}

    fn from_i64(_: &(), n: i64) -> Self {
        Self::new(n, 1)
    }

    fn add(&self, rhs: &Self) -> Self {
        Self(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self(&self.0 - &rhs.0)
    }

    fn neg(&self) -> Self {
        Self(-&self.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self(&self.0 * &rhs.0)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Self(self.0.recip()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_exact_division() {
        let a = Integer::new(-84);
        assert_eq!(a.try_div_exact(&Integer::new(12)), Some(Integer::new(-7)));
        assert_eq!(a.try_div_exact(&Integer::new(5)), None);
        assert_eq!(a.try_div_exact(&Integer::new(0)), None);
        assert_eq!(Integer::new(-1).inverse(), Some(Integer::new(-1)));
        assert_eq!(Integer::new(2).inverse(), None);
    }

    #[test]
    fn rational_field_ops() {
        let h = Rational::new(1, 2);
        assert_eq!(h.mul(&Rational::new(2, 1)), Rational::new(1, 1));
        assert_eq!(h.inverse(), Some(Rational::new(2, 1)));
        assert_eq!(Rational::new(0, 1).inverse(), None);
        assert!(Rational::new(6, 3).is_integer());
    }
}
