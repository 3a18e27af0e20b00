use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The residue is even, so it has no inverse mod `2^N`.
    NotAUnit,
    /// Division was requested but the quotient does not exist in the ring.
    NotDivisible,
    /// Series inversion needs a unit as its lowest coefficient.
    NonUnitLeadingCoefficient,
    /// Composition `f∘g` needs `g(0) = 0`.
    NonzeroConstantTerm,
    /// Operands live in different rings (different modulus element, basis, ...).
    MismatchedDomains,
    /// A truncation order below what the operation needs.
    OrderTooSmall {
        needed: usize,
        got: usize,
    },
    /// Requested precision outside the supported range.
    InvalidPrecision(u32),
    NotOnCurve,
    KernelNotTwoTorsion,
    /// Two computations that must agree did not; always an arithmetic bug.
    InternalMismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAUnit => write!(f, "element is not a 2-adic unit"),
            Error::NotDivisible => write!(f, "exact division is not possible"),
            Error::NonUnitLeadingCoefficient => {
                write!(f, "leading coefficient of the series is not a unit")
            }
            Error::NonzeroConstantTerm => {
                write!(f, "inner series of a composition has a nonzero constant term")
            }
            Error::MismatchedDomains => write!(f, "operands belong to different coefficient domains"),
            Error::OrderTooSmall { needed, got } => {
                write!(f, "truncation order {got} is too small (need at least {needed})")
            }
            Error::InvalidPrecision(n) => write!(f, "unsupported 2-adic precision {n}"),
            Error::NotOnCurve => write!(f, "point does not satisfy the Weierstrass equation"),
            Error::KernelNotTwoTorsion => write!(f, "kernel point is not 2-torsion"),
            Error::InternalMismatch(what) => write!(f, "internal mismatch: {what}"),
        }
    }
}

impl core::error::Error for Error {}
