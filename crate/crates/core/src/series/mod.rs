//! Truncated univariate, Laurent, and bivariate power series.
//!
//! All three store coefficients densely and carry an explicit truncation
//! order: a series of order `K` is known modulo `s^K` (total degree `K` for
//! the bivariate case). Binary operations never claim more than their
//! operands justify.

mod bivar;
mod laurent;
mod trunc;

pub use bivar::{divided_difference, BivarSeries};
pub use laurent::LaurentSeries;
pub use trunc::TruncSeries;
