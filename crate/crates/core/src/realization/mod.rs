//! The graded ring `Z_(2)[a,b]`, the realization axioms, degree-0 models of
//! its localizations and the Lubin-Tate ring.

mod check;
mod graded;
mod localized;
mod lubin_tate;
mod modlin;

pub use check::{check_realization_problem, CheckReport, Generator, PolynomialRing, Slot, Verdict};
pub use graded::{monomial_degree, GradedPoly, Monomial};
pub use localized::{membership, LocalizedKind, LocalizedModel, XVariable};
pub use lubin_tate::{
    height_diagnostics, is_fixed, lubin_tate_curve, lubin_tate_invariants, orbit_independence, GroupElement,
    HeightReport, LubinTateElem, LubinTateInvariants, LubinTateModel, OrbitIndependence,
};
