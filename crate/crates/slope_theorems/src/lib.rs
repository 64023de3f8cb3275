//! Exact slope arithmetic for one-parameter families of polarized varieties.
//!
//! A family here is its numerical shadow: fiber dimension, top
//! self-intersection of the polarization, degree of its pushforward to the
//! base curve, fiberwise section count and degree, plus the hypothesis flags
//! the individual statements dispatch on. Everything is `BigRational`; no
//! check ever rounds.

pub mod checks;
pub mod cone;
pub mod error;
pub mod fano;
pub mod invariants;
pub mod ratio;
pub mod report;

pub use checks::{check_slope_inequality, slope_rhs_coefficient, RhsCoefficient};
pub use error::SlopeError;
pub use fano::{check_fano_slope, fano_hc_pushdeg, fano_hc_top, FanoFamilyData, FanoVariant};
pub use invariants::{
    bs_lower_bound_chain, check_f_positive, doubled, existence_constant, twist_by_base_bundle,
    FamilyFlags, FamilyInvariants, FamilyParams,
};
pub use report::{CheckReport, TheoremId};
