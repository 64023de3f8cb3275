//! Numerical package of a fibered family: the four intersection numbers that
//! every slope statement is written in, plus the hypothesis flags the
//! checkers dispatch on.

use crate::error::SlopeError;
use crate::ratio::{bigint_json, bigint_json_opt, ratio_string, ratio_string_opt};
use crate::report::CheckReport;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Hypotheses that hold for the family, recorded as data so a checker can
/// refuse to run instead of silently assuming them.
///
/// The two `*_at_q` fields carry the multiple q >= 1 at which the property
/// is known: `gen_finite_at_q = Some(q)` means the sections of qL restrict
/// to a generically finite system on the fiber; `lf_cartier_gg_at_q =
/// Some(q)` is the stronger package (qL Cartier, globally generated on the
/// fiber, q-th multiple big enough for the statement that consumes it).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFlags {
    pub l_nef: bool,
    pub push_nef: bool,
    #[serde(
        default,
        with = "bigint_json_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub gen_finite_at_q: Option<BigInt>,
    #[serde(
        default,
        with = "bigint_json_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub lf_cartier_gg_at_q: Option<BigInt>,
    pub birational: bool,
    pub kodaira_nonneg: bool,
    pub curve_special: bool,
    pub canonical_sings: bool,
}

/// Extra numeric parameters some checks need beyond the intersection data.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    #[serde(
        default,
        with = "bigint_json_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub m: Option<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    #[serde(
        default,
        with = "ratio_string_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub w: Option<BigRational>,
}

/// n is the fiber dimension; the total space has dimension n + 1.
///
/// `top_self` is the (n+1)-fold self-intersection of the polarization on the
/// total space, `push_deg` the degree of its pushforward to the base curve,
/// `h0` the section count on a general fiber, `fiber_top` the n-fold
/// self-intersection on that fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInvariants {
    pub n: u32,
    #[serde(with = "ratio_string")]
    pub top_self: BigRational,
    #[serde(with = "ratio_string")]
    pub push_deg: BigRational,
    #[serde(with = "bigint_json")]
    pub h0: BigInt,
    #[serde(with = "ratio_string")]
    pub fiber_top: BigRational,
    #[serde(default)]
    pub flags: FamilyFlags,
    #[serde(default, skip_serializing_if = "FamilyParams::is_empty")]
    pub params: FamilyParams,
}

impl FamilyParams {
    pub fn is_empty(&self) -> bool {
        self.m.is_none() && self.s.is_none() && self.w.is_none()
    }
}

impl FamilyInvariants {
    /// top_self / push_deg.
    pub fn slope(&self) -> Result<BigRational, SlopeError> {
        if self.push_deg.is_zero() {
            return Err(SlopeError::ZeroPushforwardDegree);
        }
        Ok(&self.top_self / &self.push_deg)
    }

    /// (n+1) fiber_top / h0, the fiberwise reference value the slope is
    /// measured against.
    pub fn bs_invariant(&self) -> Result<BigRational, SlopeError> {
        if self.h0.is_zero() {
            return Err(SlopeError::NoSections);
        }
        let np1 = BigRational::from_integer(BigInt::from(self.n + 1));
        Ok(np1 * &self.fiber_top / BigRational::from_integer(self.h0.clone()))
    }
}

/// top_self >= bs_invariant * push_deg, the defining inequality of
/// f-positivity. Stated multiplicatively so it still makes sense when the
/// pushforward degree vanishes.
pub fn check_f_positive(inv: &FamilyInvariants) -> Result<CheckReport, SlopeError> {
    let rhs = inv.bs_invariant()? * &inv.push_deg;
    Ok(CheckReport::evaluated(
        "F_POSITIVE",
        inv.top_self.clone(),
        rhs,
    ))
}

/// Whether the family earns the doubled coefficient: fibers of dimension at
/// least two with nonnegative Kodaira dimension, or curve fibers in the
/// special position recorded by `curve_special`.
pub fn doubled(inv: &FamilyInvariants) -> bool {
    (inv.n >= 2 && inv.flags.kodaira_nonneg) || (inv.n == 1 && inv.flags.curve_special)
}

/// Pair of lower bounds for the reference value, valid once L is nef and
/// the fiber system (at q = 1) is generically finite, so that fiber_top >=
/// h0 - n. Doubled families get fiber_top >= 2(h0 - n) and a doubled pair.
/// Returns the reference value together with (first, second), descending.
pub fn bs_lower_bound_chain(
    inv: &FamilyInvariants,
) -> Result<(BigRational, [BigRational; 2]), SlopeError> {
    if !inv.flags.l_nef {
        return Err(SlopeError::HypothesisNotMet("needs L nef".into()));
    }
    if inv.flags.gen_finite_at_q != Some(BigInt::one()) {
        return Err(SlopeError::HypothesisNotMet(
            "fiber system must be generically finite at q = 1".into(),
        ));
    }
    let bs = inv.bs_invariant()?;
    let n = BigRational::from_integer(BigInt::from(inv.n));
    let np1 = BigRational::from_integer(BigInt::from(inv.n + 1));
    let h0 = BigRational::from_integer(inv.h0.clone());
    let excess = &h0 - &n;
    let t = inv.fiber_top.clone();
    if t < BigRational::zero() {
        return Err(SlopeError::HypothesisNotMet(
            "nef polarization needs fiber_top >= 0".into(),
        ));
    }

    let chain = if doubled(inv) {
        let two = BigRational::from_integer(BigInt::from(2));
        if t < &two * &excess {
            return Err(SlopeError::HypothesisNotMet(
                "doubled bound needs fiber_top >= 2(h0 - n)".into(),
            ));
        }
        let denom = &t + &two * &n;
        [&two * &np1 * &t / &denom, &two * &np1 * &excess / &h0]
    } else {
        if t < excess {
            return Err(SlopeError::HypothesisNotMet(
                "generic finiteness needs fiber_top >= h0 - n".into(),
            ));
        }
        let denom = &t + &n;
        [&np1 * &t / &denom, &np1 * &excess / &h0]
    };
    Ok((bs, chain))
}

/// Replaces L by L + k f*A for a base bundle A of degree `deg_a` > 0 and a
/// nonnegative rational multiple k. Only `top_self` and `push_deg` move;
/// the fiberwise data is untouched.
pub fn twist_by_base_bundle(
    inv: &FamilyInvariants,
    deg_a: &BigRational,
    k: &BigRational,
) -> Result<FamilyInvariants, SlopeError> {
    if inv.push_deg <= BigRational::zero() {
        return Err(SlopeError::ZeroPushforwardDegree);
    }
    if *deg_a <= BigRational::zero() {
        return Err(SlopeError::NonpositiveDegree);
    }
    if *k < BigRational::zero() {
        return Err(SlopeError::NegativeTwist);
    }
    let np1 = BigRational::from_integer(BigInt::from(inv.n + 1));
    let mut out = inv.clone();
    out.top_self = &inv.top_self + k * np1 * &inv.fiber_top * deg_a;
    out.push_deg = &inv.push_deg + k * BigRational::from_integer(inv.h0.clone()) * deg_a;
    Ok(out)
}

/// The uniform positive constant 1 / b^n that bounds slopes from below,
/// given the birationality constant b > 0 for fiber dimension n.
pub fn existence_constant(n: u32, b: &BigRational) -> Result<BigRational, SlopeError> {
    if *b <= BigRational::zero() {
        return Err(SlopeError::HypothesisNotMet(
            "birationality constant b must be positive".into(),
        ));
    }
    let bn = BigRational::new(b.numer().pow(n), b.denom().pow(n));
    Ok(bn.recip())
}
