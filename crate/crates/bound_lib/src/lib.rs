//! Degree and genus bounds for linear systems on curves and higher
//! dimensional fibers: the Castelnuovo machinery and the Noether-type
//! right-hand sides.
//!
//! These functions evaluate formulas; they never police the geometric
//! hypotheses (birationality, base-point-freeness, nefness) under which the
//! bounds are theorems. Callers assert those. Inputs are machine integers,
//! results are `BigInt` so products of large section counts cannot wrap.

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum BoundError {
    #[error("ambient projective dimension must be at least 2")]
    AmbientTooSmall,

    #[error("degree must be positive")]
    NonpositiveDegree,

    #[error("too few sections for this bound")]
    TooFewSections,

    #[error("fiber dimension too small for this bound")]
    DimensionTooSmall,

    #[error("codimension parameter k must satisfy 0 <= k < n")]
    InvalidCodim,

    #[error("the gap value 1 is not covered")]
    GapOne,

    #[error("gap value must be nonnegative")]
    NegativeGap,

    #[error("parameter must be nonnegative")]
    NegativeParameter,
}

/// Division data of a degree-d nondegenerate curve in P^N:
/// d - 1 = a (N - 1) + eps with 0 <= eps < N - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CastelnuovoData {
    pub d: i64,
    pub ambient_dim: i64,
    pub a: i64,
    pub eps: i64,
}

pub fn castelnuovo_data(d: i64, ambient_dim: i64) -> Result<CastelnuovoData, BoundError> {
    if ambient_dim < 2 {
        return Err(BoundError::AmbientTooSmall);
    }
    if d < 1 {
        return Err(BoundError::NonpositiveDegree);
    }
    let a = (d - 1) / (ambient_dim - 1);
    let eps = d - 1 - a * (ambient_dim - 1);
    Ok(CastelnuovoData {
        d,
        ambient_dim,
        a,
        eps,
    })
}

/// Genus bound C(a, 2)(N - 1) + a eps for a nondegenerate degree-d curve
/// in P^N.
pub fn castelnuovo_genus_bound(d: i64, ambient_dim: i64) -> Result<BigInt, BoundError> {
    let data = castelnuovo_data(d, ambient_dim)?;
    let a = BigInt::from(data.a);
    let choose2 = &a * (&a - BigInt::from(1)) / BigInt::from(2);
    Ok(choose2 * BigInt::from(data.ambient_dim - 1) + a * BigInt::from(data.eps))
}

fn require_nonnegative(value: i64) -> Result<(), BoundError> {
    if value < 0 {
        return Err(BoundError::NegativeParameter);
    }
    Ok(())
}

/// (p+1)(h0 - 2) + 2: minimal degree of a birationally very ample L on a
/// curve with h0 sections and K - pL effective.
pub fn min_degree_birational_subcanonical(h0: i64, p: i64) -> Result<BigInt, BoundError> {
    require_nonnegative(p)?;
    if h0 < 2 {
        return Err(BoundError::TooFewSections);
    }
    Ok(BigInt::from(p + 1) * BigInt::from(h0 - 2) + 2)
}

/// (n+p)(h0 - 1 - n) + 2: minimal top degree L^n when the sections map the
/// n-dimensional fiber birationally and K - pL is effective.
pub fn harris_bound(n: i64, p: i64, h0: i64) -> Result<BigInt, BoundError> {
    if n < 1 {
        return Err(BoundError::DimensionTooSmall);
    }
    require_nonnegative(p)?;
    if h0 < n + 1 {
        return Err(BoundError::TooFewSections);
    }
    Ok(BigInt::from(n + p) * BigInt::from(h0 - 1 - n) + 2)
}

/// max(2 h0 - 2k, 2): the k-fold hyperplane-section bound.
pub fn noether_i_bound(k: i64, h0: i64) -> Result<BigInt, BoundError> {
    require_nonnegative(k)?;
    if h0 < k + 1 {
        return Err(BoundError::TooFewSections);
    }
    Ok(BigInt::from((2 * h0 - 2 * k).max(2)))
}

/// h0 - k: the weaker companion of the above, with no birationality input.
pub fn noether_ibis_bound(k: i64, h0: i64) -> Result<BigInt, BoundError> {
    require_nonnegative(k)?;
    if h0 < k + 1 {
        return Err(BoundError::TooFewSections);
    }
    Ok(BigInt::from(h0 - k))
}

/// 2 h0_m - 2 when the fiber has nonnegative Kodaira dimension and
/// dimension at least 2, else h0_m - 1. Assumes h0_m >= 1.
pub fn noether_ii_bound(h0_m: i64, kodaira_nonneg_and_dim_ge2: bool) -> BigInt {
    if kodaira_nonneg_and_dim_ge2 {
        BigInt::from(2 * h0_m - 2)
    } else {
        BigInt::from(h0_m - 1)
    }
}

/// Which regime of the moving-part comparison applies: the gap
/// L^n - L^{n-1} M is either at least 2 or exactly 0; the gap-1 case is
/// not covered and is rejected outright.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapCase {
    GeTwo,
    Eq0,
}

impl GapCase {
    pub fn from_gap(gap: i64) -> Result<GapCase, BoundError> {
        match gap {
            g if g >= 2 => Ok(GapCase::GeTwo),
            0 => Ok(GapCase::Eq0),
            1 => Err(BoundError::GapOne),
            _ => Err(BoundError::NegativeGap),
        }
    }
}

/// GeTwo: 2 h0_m - 2. Eq0: 2 h0_l - 2n. Needs n >= 2.
pub fn noether_iii_bound(
    h0_m: i64,
    h0_l: i64,
    n: i64,
    gap_case: GapCase,
) -> Result<BigInt, BoundError> {
    if n < 2 {
        return Err(BoundError::DimensionTooSmall);
    }
    Ok(match gap_case {
        GapCase::GeTwo => BigInt::from(2 * h0_m - 2),
        GapCase::Eq0 => BigInt::from(2 * h0_l) - BigInt::from(2 * n),
    })
}

/// (n + p - k + 2)(h0_m - k) for a base-point-free system cut down k times,
/// 0 <= k < n.
pub fn castelnuovo2_bound(n: i64, p: i64, k: i64, h0_m: i64) -> Result<BigInt, BoundError> {
    require_nonnegative(p)?;
    if k < 0 || k >= n {
        return Err(BoundError::InvalidCodim);
    }
    Ok(BigInt::from(n + p - k + 2) * BigInt::from(h0_m - k))
}

/// (n + p)(h0_m - 2) + 2 for a pair of base-point-free systems, n >= 2.
pub fn castelnuovo3_bound(n: i64, p: i64, h0_m: i64) -> Result<BigInt, BoundError> {
    if n < 2 {
        return Err(BoundError::DimensionTooSmall);
    }
    require_nonnegative(p)?;
    Ok(BigInt::from(n + p) * BigInt::from(h0_m - 2) + 2)
}

/// 2 h0 - 2: minimal degree of a special divisor with h0 sections.
/// Assumes h0 >= 1.
pub fn clifford_bound(h0: i64) -> BigInt {
    BigInt::from(2 * h0 - 2)
}
