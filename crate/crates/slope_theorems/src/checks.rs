//! Dispatch table mapping each slope statement to its hypothesis set and
//! right-hand coefficient.
//!
//! Every inequality here has the shape
//!     lhs_scale * top_self / push_deg >= coeff
//! once the pushforward degree is positive; otherwise the two sides are
//! compared without normalizing. The scale is nontrivial only for the
//! statements written in terms of the m-th multiple of the polarization.

use crate::error::SlopeError;
use crate::invariants::{doubled, FamilyInvariants};
use crate::report::{CheckReport, TheoremId};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

pub struct RhsCoefficient {
    pub coeff: BigRational,
    pub lhs_scale: BigRational,
}

fn hyp(msg: &str) -> SlopeError {
    SlopeError::HypothesisNotMet(msg.to_string())
}

fn inverse_power(q: &BigInt, n: u32) -> Result<BigRational, SlopeError> {
    if *q < BigInt::one() {
        return Err(hyp("witness multiple q must be at least 1"));
    }
    Ok(BigRational::new(BigInt::one(), q.pow(n)))
}

/// Witness multiple at which either generic finiteness or the Cartier +
/// globally generated package is known, whichever is recorded.
fn any_witness(inv: &FamilyInvariants) -> Option<BigInt> {
    inv.flags
        .gen_finite_at_q
        .clone()
        .or_else(|| inv.flags.lf_cartier_gg_at_q.clone())
}

pub fn slope_rhs_coefficient(
    theorem: TheoremId,
    inv: &FamilyInvariants,
) -> Result<RhsCoefficient, SlopeError> {
    let one = BigRational::one();
    let n_rat = BigRational::from_integer(BigInt::from(inv.n));
    let h0 = BigRational::from_integer(inv.h0.clone());
    let t = inv.fiber_top.clone();
    let two = BigRational::from_integer(BigInt::from(2));

    let (coeff, lhs_scale) = match theorem {
        TheoremId::XiaoH1 => {
            if inv.flags.gen_finite_at_q != Some(BigInt::one()) {
                return Err(hyp("needs a generically finite fiber system at q = 1"));
            }
            if inv.h0 < BigInt::one() {
                return Err(hyp("needs at least one section on the fiber"));
            }
            let factor = if doubled(inv) { 4 } else { 2 };
            (
                BigRational::from_integer(BigInt::from(factor)) * (&h0 - &n_rat) / &h0,
                one,
            )
        }
        TheoremId::XiaoH2 => {
            if inv.flags.lf_cartier_gg_at_q != Some(BigInt::one()) {
                return Err(hyp("needs the Cartier + globally generated package at q = 1"));
            }
            if t <= BigRational::zero() {
                return Err(hyp("needs positive fiber degree"));
            }
            let coeff = if doubled(inv) {
                BigRational::from_integer(BigInt::from(4)) * &t / (&t + &two * &n_rat)
            } else {
                &two * &t / (&t + &n_rat)
            };
            (coeff, one)
        }
        TheoremId::XiaoBir1 | TheoremId::XiaoBir2 => {
            if !inv.flags.birational {
                return Err(hyp("needs a birational fiber system"));
            }
            if inv.n < 2 {
                return Err(hyp("needs fiber dimension at least 2"));
            }
            if !inv.flags.canonical_sings {
                return Err(hyp("needs canonical singularities on fibers"));
            }
            let Some(s) = inv.params.s else {
                return Err(hyp("needs the positivity parameter s"));
            };
            let ns = BigRational::from_integer(BigInt::from(inv.n) + BigInt::from(s));
            let coeff = match theorem {
                TheoremId::XiaoBir1 => {
                    if inv.h0 < BigInt::one() {
                        return Err(hyp("needs at least one section on the fiber"));
                    }
                    &two * &ns * (&h0 - &n_rat - &two) / &h0
                }
                _ => {
                    let denom = &t + &ns * (&n_rat + &two);
                    if denom <= BigRational::zero() {
                        return Err(hyp("degenerate denominator in coefficient"));
                    }
                    &two * &ns * &t / denom
                }
            };
            (coeff, one)
        }
        TheoremId::Barja1 => {
            let Some(q) = any_witness(inv) else {
                return Err(hyp("needs a finiteness or global generation witness"));
            };
            (inverse_power(&q, inv.n)?, one)
        }
        TheoremId::Barja2 => {
            let Some(q) = inv.flags.gen_finite_at_q.clone() else {
                return Err(hyp("needs a generic finiteness witness"));
            };
            if !doubled(inv) {
                return Err(hyp("doubled constant needs nonnegative Kodaira dimension or the special curve case"));
            }
            (&two * inverse_power(&q, inv.n)?, one)
        }
        TheoremId::Ksb1 => {
            let m = require_multiple(inv)?;
            let Some(w) = inv.params.w.clone() else {
                return Err(hyp("needs the volume parameter w"));
            };
            if w <= BigRational::zero() {
                return Err(hyp("volume parameter w must be positive"));
            }
            require_witness_at(inv, &m)?;
            let wm = &w * BigRational::from_integer((&m).pow(inv.n));
            (
                &two * &wm / (&wm + &n_rat),
                BigRational::from_integer((&m).pow(inv.n + 1)),
            )
        }
        TheoremId::Ksb2 => {
            let m = require_multiple(inv)?;
            require_witness_at(inv, &m)?;
            (one, BigRational::from_integer((&m).pow(inv.n + 1)))
        }
        TheoremId::Ksb3 => {
            let m = require_multiple(inv)?;
            let Some(q) = any_witness(inv) else {
                return Err(hyp("needs a finiteness or global generation witness"));
            };
            (
                inverse_power(&q, inv.n)?,
                BigRational::from_integer((&m).pow(inv.n + 1)),
            )
        }
        TheoremId::Ksb4 => {
            if !inv.flags.l_nef {
                return Err(hyp("needs a nef polarization"));
            }
            let Some(q) = any_witness(inv) else {
                return Err(hyp("needs a finiteness or global generation witness"));
            };
            (inverse_power(&q, inv.n)?, one)
        }
    };
    Ok(RhsCoefficient { coeff, lhs_scale })
}

fn require_multiple(inv: &FamilyInvariants) -> Result<BigInt, SlopeError> {
    match inv.params.m.clone() {
        Some(m) if m >= BigInt::one() => Ok(m),
        Some(_) => Err(hyp("multiple m must be at least 1")),
        None => Err(hyp("needs the multiple m")),
    }
}

fn require_witness_at(inv: &FamilyInvariants, m: &BigInt) -> Result<(), SlopeError> {
    let at_m = inv.flags.gen_finite_at_q.as_ref() == Some(m)
        || inv.flags.lf_cartier_gg_at_q.as_ref() == Some(m);
    if at_m {
        Ok(())
    } else {
        Err(hyp("needs a finiteness or global generation witness at q = m"))
    }
}

/// Evaluates one slope inequality on the family. The nef hypotheses on L
/// and its pushforward gate every statement except the last block, which
/// builds its own positivity into the witness flags.
pub fn check_slope_inequality(
    theorem: TheoremId,
    inv: &FamilyInvariants,
) -> Result<CheckReport, SlopeError> {
    let needs_nef = !matches!(
        theorem,
        TheoremId::Ksb1 | TheoremId::Ksb2 | TheoremId::Ksb3 | TheoremId::Ksb4
    );
    if needs_nef && !(inv.flags.l_nef && inv.flags.push_nef) {
        return Err(hyp("needs L nef and a nef pushforward"));
    }
    let rc = slope_rhs_coefficient(theorem, inv)?;
    let report = if inv.push_deg > BigRational::zero() {
        CheckReport::evaluated(
            theorem.as_str(),
            rc.lhs_scale * &inv.top_self / &inv.push_deg,
            rc.coeff,
        )
    } else {
        CheckReport::evaluated(
            theorem.as_str(),
            rc.lhs_scale * &inv.top_self,
            rc.coeff * &inv.push_deg,
        )
        .with_note("pushforward degree not positive; sides are not normalized")
    };
    Ok(report)
}
