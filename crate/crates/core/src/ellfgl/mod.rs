//! Weierstrass curves and their formal group laws.
//!
//! The formal coordinate is `z = −x/y` with `w = −1/y`, so the point at
//! infinity sits at `z = 0` and the curve becomes `w = w(z) = z³ + …`.

mod curve;
mod fgl;
mod velu;

pub use curve::{expand_w, w_relation_residual, AffinePoint, WeierstrassCurve};
pub use fgl::{fgl_from_curve, n_series, residual_v1_v2, FormalGroupLaw};
pub use velu::{
    is_two_torsion, min_precision, normalize_gamma1_3_image, rezk_isogeny_integral, rezk_isogeny_two_inverted,
    velu_map_point, velu_two_isogeny, RezkIsogenyCheck,
};
