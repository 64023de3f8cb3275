//! Constructors for fibered families of polarized varieties over a curve,
//! emitting the invariant records the slope checks consume. One side of
//! the crate builds the classical bounded-slope families (projective and
//! quadric bundles, scrolls, double covers); the other builds weighted
//! hypersurface families whose slopes sink arbitrarily low. A symbolic
//! Chow ring for two-stage projective bundle towers cross-checks every
//! closed-form intersection number independently.

pub mod bundle;
pub mod constructors;
pub mod error;
pub mod oracle;
pub mod wps;

pub use bundle::{sym_power, sym_power_degree, BundleOnCurve};
pub use constructors::{
    family_double_cover, family_pn, family_quadric, family_quadric_low_rank, family_scroll,
    family_veronese, scroll_slope_limit, DoubleCoverSpec, ScrollFamily,
};
pub use error::FamilyError;
pub use oracle::{tower_intersection, tower_product, tower_top_power};
pub use wps::{
    hypersurface_slope_closed_form, near_extremal_family, sylvester_family, threshold_probe,
    vanishing_slope_family, wps_family, wps_special_slope, SylvesterFamily, ThresholdProbe,
    WpsHypersurfaceFamily,
};
