//! Exact arithmetic for formal group laws of Weierstrass curves over graded
//! and 2-adic coefficient rings, and the computation certifying that the
//! subring `Z₂[x⁻¹]^∧` of `Z₂((x))^∧` is closed under the power operation θ
//! attached to the curve `y² + a·xy + b·y = x³`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs; IO, report formatting and the command-line
//! front end live in the `fgltheta` crate.
//!
//! Layout:
//!
//! - [`coeffdom`]: coefficient rings (residues mod `2^N` with precision,
//!   big integers and rationals, `W(F₄)`, the cubic extension `B[d]/(d³ − td − 2)`).
//! - [`series`]: truncated, Laurent and bivariate power series.
//! - [`ellfgl`]: Weierstrass curves, their formal group laws, n-series,
//!   2-torsion and Vélu's 2-isogeny.
//! - [`realization`]: the graded ring `Z_(2)[a,b]`, the realization axioms,
//!   localized degree-0 models and the Lubin-Tate ring with its group action.
//! - [`theta`]: the 2-torsion parameter `c`, the Frobenius lift ψ² and θ.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod coeffdom;
pub mod ellfgl;
mod error;
pub mod realization;
pub mod series;
pub mod theta;

pub use error::{Error, Result};

/// Default number of 2-adic digits carried by residues.
pub const DEFAULT_PADIC_DIGITS: u32 = 64;
/// Default truncation order for the θ pipeline (in `s = t⁻³`).
pub const DEFAULT_SERIES_ORDER: usize = 16;
/// Default total-degree truncation for bivariate formal group laws.
pub const DEFAULT_FGL_ORDER: usize = 12;
