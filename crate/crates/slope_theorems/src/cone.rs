//! Positivity ranges in the two-parameter cone spanned by the polarization
//! and a fiber: for which x is (the m-th multiple of) L minus x times a
//! fiber still ample or nef, and what happens asymptotically in m.

use crate::error::SlopeError;
use crate::ratio::format_ratio;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub hi_exclusive: bool,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let close = if self.hi_exclusive { ')' } else { ']' };
        write!(
            f,
            "[{}, {}{}",
            format_ratio(&self.lo),
            format_ratio(&self.hi),
            close
        )
    }
}

fn half_open(hi: BigRational) -> Interval {
    Interval {
        lo: BigRational::zero(),
        hi,
        hi_exclusive: true,
    }
}

fn check_multiple(m: &BigInt) -> Result<(), SlopeError> {
    if *m < BigInt::one() {
        return Err(SlopeError::HypothesisNotMet(
            "multiple m must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Ample range [0, 2w / (m (w m^n + n))) from the volume parameter w > 0.
pub fn ample_interval_from_volume(
    n: u32,
    m: &BigInt,
    w: &BigRational,
) -> Result<Interval, SlopeError> {
    check_multiple(m)?;
    if *w <= BigRational::zero() {
        return Err(SlopeError::HypothesisNotMet(
            "volume parameter w must be positive".into(),
        ));
    }
    let wmn = w * BigRational::from_integer(m.pow(n));
    let hi = BigRational::from_integer(BigInt::from(2)) * w
        / (BigRational::from_integer(m.clone())
            * (wmn + BigRational::from_integer(BigInt::from(n))));
    Ok(half_open(hi))
}

/// Ample range [0, 1 / (q^n m^{n+1})) from a witness multiple q >= 1.
pub fn ample_interval_from_witness(
    n: u32,
    m: &BigInt,
    q: &BigInt,
) -> Result<Interval, SlopeError> {
    check_multiple(m)?;
    if *q < BigInt::one() {
        return Err(SlopeError::HypothesisNotMet(
            "witness multiple q must be at least 1".into(),
        ));
    }
    Ok(half_open(BigRational::new(BigInt::one(), q.pow(n) * m.pow(n + 1))))
}

/// Which lower bound applies for nefness away from finitely many fibers.
/// The volume cases quote the fiber volume v of the m-th multiple, the
/// witness cases a multiple q at which positivity is certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NefAwayCase {
    /// 4 v m^n / (v m^n + 2n); needs n >= 2, or n = 1 with m = 1.
    VolumeDoubled { v: BigRational },
    /// 2 v m^n / (v m^n + n); the n = 1, m >= 2 companion of the above.
    VolumeSingle { v: BigRational },
    /// 2 / q^n; needs n >= 2, or n = q = m = 1.
    WitnessDoubled { q: BigInt },
    /// 1 / q^n; no extra constraint.
    WitnessSingle { q: BigInt },
}

pub struct NefAwayBound {
    pub coeff: BigRational,
    pub lhs_scale: BigRational,
}

pub fn nef_away_coefficient(
    case: &NefAwayCase,
    n: u32,
    m: &BigInt,
) -> Result<NefAwayBound, SlopeError> {
    check_multiple(m)?;
    let n_rat = BigRational::from_integer(BigInt::from(n));
    let two = BigRational::from_integer(BigInt::from(2));
    let coeff = match case {
        NefAwayCase::VolumeDoubled { v } => {
            if !(n >= 2 || (n == 1 && m.is_one())) {
                return Err(SlopeError::HypothesisNotMet(
                    "doubled volume bound needs n >= 2, or n = 1 with m = 1".into(),
                ));
            }
            check_volume(v)?;
            let vmn = v * BigRational::from_integer(m.pow(n));
            BigRational::from_integer(BigInt::from(4)) * &vmn / (&vmn + &two * &n_rat)
        }
        NefAwayCase::VolumeSingle { v } => {
            if !(n == 1 && *m >= BigInt::from(2)) {
                return Err(SlopeError::HypothesisNotMet(
                    "single volume bound is the n = 1, m >= 2 case".into(),
                ));
            }
            check_volume(v)?;
            let vmn = v * BigRational::from_integer(m.pow(n));
            &two * &vmn / (&vmn + &n_rat)
        }
        NefAwayCase::WitnessDoubled { q } => {
            if !(n >= 2 || (n == 1 && q.is_one() && m.is_one())) {
                return Err(SlopeError::HypothesisNotMet(
                    "doubled witness bound needs n >= 2, or n = q = m = 1".into(),
                ));
            }
            check_witness(q)?;
            &two * BigRational::new(BigInt::one(), q.pow(n))
        }
        NefAwayCase::WitnessSingle { q } => {
            check_witness(q)?;
            BigRational::new(BigInt::one(), q.pow(n))
        }
    };
    Ok(NefAwayBound {
        coeff,
        lhs_scale: BigRational::from_integer(m.pow(n + 1)),
    })
}

fn check_volume(v: &BigRational) -> Result<(), SlopeError> {
    if *v <= BigRational::zero() {
        return Err(SlopeError::HypothesisNotMet(
            "fiber volume v must be positive".into(),
        ));
    }
    Ok(())
}

fn check_witness(q: &BigInt) -> Result<(), SlopeError> {
    if *q < BigInt::one() {
        return Err(SlopeError::HypothesisNotMet(
            "witness multiple q must be at least 1".into(),
        ));
    }
    Ok(())
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// 2 (n+1)! m / (2m - (n+1)): the multiple of the fiber class below which
/// the m-th relative canonical stays nef for large m. Needs 2m > n + 1.
pub fn asymptotic_nef_threshold(n: u32, m: &BigInt) -> Result<BigRational, SlopeError> {
    check_multiple(m)?;
    let two_m = BigInt::from(2) * m;
    let np1 = BigInt::from(n + 1);
    if two_m <= np1 {
        return Err(SlopeError::DegenerateDenominator);
    }
    Ok(BigRational::new(
        BigInt::from(2) * factorial(n + 1) * m,
        two_m - np1,
    ))
}

/// m^{n+1}/(n+1)! - m^n/(2 n!), the leading combination the threshold
/// divides against: m^{n+1} over this value reproduces the threshold.
pub fn lambda_leading_coefficient(n: u32, m: &BigInt) -> BigRational {
    let first = BigRational::new(m.pow(n + 1), factorial(n + 1));
    let second = BigRational::new(m.pow(n), BigInt::from(2) * factorial(n));
    first - second
}
