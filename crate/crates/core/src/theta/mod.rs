//! The 2-torsion parameter `c`, the Frobenius lift ψ² on `t` and on
//! `s = t⁻³ = x⁻¹`, and the closure of `Z₂[x⁻¹]^∧` under θ.
//!
//! Laurent series in `t` are stored in the variable `q = t⁻¹`, so `s = q³`.

mod c_series;
mod pipeline;

pub use c_series::{alpha_check, solve_c, AlphaCheck, CSeries, MIN_ORDER, MIN_PRECISION};
pub use pipeline::{
    evaluate_at_alpha, frobenius_on_monomials, psi2_of_s, psi2_of_t, theta_pipeline, NonMember, StabilityVerdict,
    ThetaReport, ThetaResiduals,
};
