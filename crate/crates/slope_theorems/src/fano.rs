//! Slope checks for families whose fibers are log Fano pairs, polarized by a
//! twist of the anticanonical class against the determinant of the family.
//!
//! The twisted class is H = -(K + D) + c f*(lambda) with twist coefficient
//! c = C delta / ((delta - 1) v (n + 1)), where delta > 1 is the stability
//! threshold, C > 1 the chosen margin, and v the fiber anticanonical degree.
//! The determinant class has degree -antican_top, and (f*lambda)^2 = 0, so
//! the top self-intersection and pushforward degree of qH close up into the
//! rational expressions below.

use crate::error::SlopeError;
use crate::ratio::{bigint_json, ratio_string};
use crate::report::CheckReport;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoFamilyData {
    /// Fiber dimension.
    pub n: u32,
    /// Anticanonical fiber degree (-(K_F + D_F))^n.
    #[serde(with = "ratio_string")]
    pub v: BigRational,
    /// Stability threshold, must exceed 1.
    #[serde(with = "ratio_string")]
    pub delta: BigRational,
    /// Margin factor, must exceed 1.
    #[serde(with = "ratio_string")]
    pub c: BigRational,
    /// Multiple clearing both the Cartier condition and the twist.
    #[serde(with = "bigint_json")]
    pub q: BigInt,
    /// (-(K + D))^{n+1} on the total space.
    #[serde(with = "ratio_string")]
    pub antican_top: BigRational,
    /// deg f_* O(-q(K + D)).
    #[serde(with = "ratio_string")]
    pub push_deg_neg_q: BigRational,
    /// h^0 of -q(K_F + D_F) on a general fiber.
    #[serde(with = "bigint_json")]
    pub h0_fiber: BigInt,
    /// The sections of -q(K_F + D_F) map the fiber generically finitely.
    pub gen_finite: bool,
    /// -q(K_F + D_F) is globally generated.
    pub globally_generated: bool,
    /// q c deg(lambda) is an integral class, so qH is honest.
    pub q_twist_integral: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanoVariant {
    I,
    II,
    III,
}

impl FanoVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            FanoVariant::I => "FANO_I",
            FanoVariant::II => "FANO_II",
            FanoVariant::III => "FANO_III",
        }
    }
}

impl FromStr for FanoVariant {
    type Err = SlopeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "fano_i" => Ok(FanoVariant::I),
            "ii" | "fano_ii" => Ok(FanoVariant::II),
            "iii" | "fano_iii" => Ok(FanoVariant::III),
            other => Err(SlopeError::UnknownTheorem(other.to_string())),
        }
    }
}

fn check_threshold(data: &FanoFamilyData) -> Result<(), SlopeError> {
    if data.delta <= BigRational::one() || data.c <= BigRational::one() {
        return Err(SlopeError::InvalidThreshold);
    }
    Ok(())
}

/// (qH)^{n+1} = q^{n+1} (-antican_top) (delta (C - 1) + 1) / (delta - 1).
pub fn fano_hc_top(data: &FanoFamilyData) -> Result<BigRational, SlopeError> {
    check_threshold(data)?;
    let one = BigRational::one();
    let q_pow = BigRational::from_integer((&data.q).pow(data.n + 1));
    Ok(q_pow * (-&data.antican_top) * (&data.delta * (&data.c - &one) + &one)
        / (&data.delta - &one))
}

/// deg f_* O(qH) = push_deg_neg_q - C (q h0 / (v (n+1))) (delta/(delta-1)) antican_top.
pub fn fano_hc_pushdeg(data: &FanoFamilyData) -> Result<BigRational, SlopeError> {
    check_threshold(data)?;
    if data.v <= BigRational::zero() {
        return Err(SlopeError::HypothesisNotMet(
            "fiber anticanonical degree v must be positive".into(),
        ));
    }
    if !data.q_twist_integral {
        return Err(SlopeError::NonIntegralTwist);
    }
    let one = BigRational::one();
    let np1 = BigRational::from_integer(BigInt::from(data.n + 1));
    let twist = &data.c
        * (BigRational::from_integer(&data.q * &data.h0_fiber) / (&data.v * np1))
        * (&data.delta / (&data.delta - &one));
    Ok(&data.push_deg_neg_q - twist * &data.antican_top)
}

/// Evaluates the slope statement for the chosen variant. The left side is
/// the top self-intersection of qH, the right side the variant coefficient
/// times the pushforward degree; both absolute, no normalization.
pub fn check_fano_slope(
    variant: FanoVariant,
    data: &FanoFamilyData,
) -> Result<CheckReport, SlopeError> {
    check_threshold(data)?;
    let one = BigRational::one();
    if BigRational::from_integer(data.q.clone()) * (&data.c - &one) < one {
        return Err(SlopeError::TwistTooSmall);
    }

    let coeff = match variant {
        FanoVariant::I => BigRational::one(),
        FanoVariant::II => {
            if !data.gen_finite {
                return Err(SlopeError::HypothesisNotMet(
                    "needs generically finite anticanonical sections at q".into(),
                ));
            }
            if data.h0_fiber < BigInt::one() {
                return Err(SlopeError::HypothesisNotMet(
                    "needs at least one section on the fiber".into(),
                ));
            }
            let h0 = BigRational::from_integer(data.h0_fiber.clone());
            let n = BigRational::from_integer(BigInt::from(data.n));
            BigRational::from_integer(BigInt::from(2)) * (&h0 - &n) / &h0
        }
        FanoVariant::III => {
            if !data.globally_generated {
                return Err(SlopeError::HypothesisNotMet(
                    "needs -q(K_F + D_F) globally generated".into(),
                ));
            }
            if data.v <= BigRational::zero() {
                return Err(SlopeError::HypothesisNotMet(
                    "fiber anticanonical degree v must be positive".into(),
                ));
            }
            let qnv = BigRational::from_integer((&data.q).pow(data.n)) * &data.v;
            let n = BigRational::from_integer(BigInt::from(data.n));
            BigRational::from_integer(BigInt::from(2)) * &qnv / (&qnv + &n)
        }
    };

    let lhs = fano_hc_top(data)?;
    let rhs = coeff * fano_hc_pushdeg(data)?;
    Ok(CheckReport::evaluated(variant.as_str(), lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Product family P^1 x B: both degrees vanish, every variant is an
    /// equality of zeros.
    fn product_surface() -> FanoFamilyData {
        FanoFamilyData {
            n: 1,
            v: q(2, 1),
            delta: q(3, 2),
            c: q(2, 1),
            q: BigInt::one(),
            antican_top: q(0, 1),
            push_deg_neg_q: q(0, 1),
            h0_fiber: BigInt::from(3),
            gen_finite: true,
            globally_generated: true,
            q_twist_integral: true,
        }
    }

    #[test]
    fn product_family_sits_on_the_boundary() {
        let data = product_surface();
        assert_eq!(fano_hc_top(&data).unwrap(), q(0, 1));
        assert_eq!(fano_hc_pushdeg(&data).unwrap(), q(0, 1));
        for variant in [FanoVariant::I, FanoVariant::II, FanoVariant::III] {
            let report = check_fano_slope(variant, &data).unwrap();
            assert!(report.holds, "{}", variant.as_str());
            assert_eq!(report.slack, q(0, 1));
        }
    }

    #[test]
    fn closed_forms_match_a_hand_expansion() {
        let mut data = product_surface();
        data.antican_top = q(-5, 1);
        data.push_deg_neg_q = q(7, 1);
        data.q = BigInt::from(3);
        data.n = 2;
        // top: 3^3 * 5 * (3/2 * 1 + 1) / (1/2) = 27 * 5 * 5 = 675
        assert_eq!(fano_hc_top(&data).unwrap(), q(675, 1));
        // push: 7 - 2 * (3*3/(2*3)) * 3 * (-5) = 7 + 45 = 52
        assert_eq!(fano_hc_pushdeg(&data).unwrap(), q(52, 1));
    }

    #[test]
    fn twist_must_clear_the_margin() {
        let mut data = product_surface();
        data.c = q(4, 3);
        data.q = BigInt::from(3);
        assert!(check_fano_slope(FanoVariant::I, &data).is_ok());
        data.q = BigInt::from(2);
        assert_eq!(
            check_fano_slope(FanoVariant::I, &data),
            Err(SlopeError::TwistTooSmall)
        );
    }

    #[test]
    fn preconditions_are_enforced() {
        let mut data = product_surface();
        data.delta = q(1, 1);
        assert_eq!(fano_hc_top(&data), Err(SlopeError::InvalidThreshold));

        let mut data = product_surface();
        data.q_twist_integral = false;
        assert_eq!(fano_hc_pushdeg(&data), Err(SlopeError::NonIntegralTwist));

        let mut data = product_surface();
        data.gen_finite = false;
        assert!(matches!(
            check_fano_slope(FanoVariant::II, &data),
            Err(SlopeError::HypothesisNotMet(_))
        ));
        data.globally_generated = false;
        assert!(matches!(
            check_fano_slope(FanoVariant::III, &data),
            Err(SlopeError::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn variant_coefficients() {
        let mut data = product_surface();
        data.antican_top = q(-1, 1);
        data.push_deg_neg_q = q(10, 1);
        // variant ii: 2 (h0 - n)/h0 = 2*2/3 = 4/3
        // push = 10 + 2 * (3/4) * 3 * 1 = 10 + 9/2 = 29/2
        let report = check_fano_slope(FanoVariant::II, &data).unwrap();
        assert_eq!(report.rhs, q(4, 3) * q(29, 2));
        // variant iii: 2 q^n v / (q^n v + n) = 2*2/(2+1) = 4/3 as well here
        let report = check_fano_slope(FanoVariant::III, &data).unwrap();
        assert_eq!(report.rhs, q(4, 3) * q(29, 2));

        assert_eq!("ii".parse::<FanoVariant>().unwrap(), FanoVariant::II);
        assert!("iv".parse::<FanoVariant>().is_err());
    }
}
