//! Slope staircases of vector bundles on curves and the intersection-number
//! bounds they induce.
//!
//! A [`HNProfile`] records the (cumulative rank, slope) steps of the
//! canonical filtration of a bundle. Paired with an [`IntersectionModel`],
//! a table of degree-n products of the associated divisor classes, the
//! profile yields lower bounds for the top self-intersection of the
//! tautological class: [`xiao_bound_general`] is the master sum, the
//! `xiao_bound_*` variants are its classical closed-form specializations,
//! and [`best_xiao_bound`] searches the schedule space.
//!
//! Two smaller numerical facts live here as well: the gap lemma for
//! log-concave degree sequences and the nef-after-pullback criterion.

mod bound;
mod concave;
mod error;
mod model;
mod profile;

pub use bound::{
    best_xiao_bound, full_seq_s, seq_m_for_1a, seq_m_for_1b, seq_m_for_2, xiao_bound_1a,
    xiao_bound_1b, xiao_bound_2, xiao_bound_general, BestBound, DEFAULT_SEARCH_CAP,
};
pub use concave::{check_log_concave_lemma, miyaoka_nef_check};
pub use error::HnError;
pub use model::{multisets, ExtraClassChoice, IntersectionModel};
pub use profile::{HNProfile, HNStep};
