//! Invariant packages for the standard fibered families over a curve:
//! projective bundles, Veronese and quadric bundles, scrolls, and double
//! covers of each. Every constructor emits the full numerical record of
//! the family (top self-intersection, pushforward degree, fiber section
//! count, fiber degree) together with the witness flags the slope checks
//! consume.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use slope_theorems::ratio::{format_ratio, parse_ratio, ratio_string};
use slope_theorems::{FamilyFlags, FamilyInvariants, FamilyParams};

use crate::bundle::{sym_power_degree, BundleOnCurve};
use crate::error::FamilyError;

fn rat_u(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn fiber_dim(rank: u64, codim: u64) -> Result<u32, FamilyError> {
    u32::try_from(rank - codim)
        .map_err(|_| FamilyError::RankRange("fiber dimension overflows u32".into()))
}

fn embedded_flags() -> FamilyFlags {
    FamilyFlags {
        l_nef: true,
        push_nef: true,
        gen_finite_at_q: Some(BigInt::one()),
        lf_cartier_gg_at_q: Some(BigInt::one()),
        birational: true,
        kodaira_nonneg: false,
        curve_special: false,
        canonical_sings: true,
    }
}

/// P(E) -> B polarized by the tautological class, fibers projective
/// spaces of dimension rank - 1 embedded by a hyperplane system. The
/// slope is identically 1 and f-positivity is an equality.
pub fn family_pn(e: &BundleOnCurve) -> Result<FamilyInvariants, FamilyError> {
    if !e.is_nef() {
        return Err(FamilyError::NotNef);
    }
    if !e.degree().is_positive() {
        return Err(FamilyError::NonpositiveDegree);
    }
    Ok(FamilyInvariants {
        n: fiber_dim(e.rank(), 1)?,
        top_self: e.degree().clone(),
        push_deg: e.degree().clone(),
        h0: BigInt::from(e.rank()),
        fiber_top: BigRational::one(),
        flags: embedded_flags(),
        params: FamilyParams::default(),
    })
}

/// P(E) -> B for rank-3 E, polarized by twice the tautological class, so
/// the fibers are planes carrying a conic system. Slope 2, and again an
/// f-positivity equality.
pub fn family_veronese(e: &BundleOnCurve) -> Result<FamilyInvariants, FamilyError> {
    if e.rank() != 3 {
        return Err(FamilyError::WrongRank {
            expected: 3,
            got: e.rank(),
        });
    }
    if !e.is_nef() {
        return Err(FamilyError::NotNef);
    }
    if !e.degree().is_positive() {
        return Err(FamilyError::NonpositiveDegree);
    }
    let (h0, push) = sym_power_degree(e, 2);
    Ok(FamilyInvariants {
        n: 2,
        top_self: BigRational::from_integer(8.into()) * e.degree(),
        push_deg: push,
        h0,
        fiber_top: BigRational::from_integer(4.into()),
        flags: embedded_flags(),
        params: FamilyParams::default(),
    })
}

/// Quadric bundle inside P(E) cut out by a section of 2 xi + f*A with
/// deg A = `deg_a`, polarized by the restriction of xi. The pushforward
/// is E itself, so deg_a moves only the top self-intersection:
/// slope = 2 + deg_a / deg E.
pub fn family_quadric(
    e: &BundleOnCurve,
    deg_a: &BigRational,
) -> Result<FamilyInvariants, FamilyError> {
    if e.rank() < 3 {
        return Err(FamilyError::RankRange(
            "quadric bundles need rank at least 3".into(),
        ));
    }
    if !e.is_nef() {
        return Err(FamilyError::NotNef);
    }
    if !e.degree().is_positive() {
        return Err(FamilyError::NonpositiveDegree);
    }
    Ok(FamilyInvariants {
        n: fiber_dim(e.rank(), 2)?,
        top_self: BigRational::from_integer(2.into()) * e.degree() + deg_a,
        push_deg: e.degree().clone(),
        h0: BigInt::from(e.rank()),
        fiber_top: BigRational::from_integer(2.into()),
        flags: embedded_flags(),
        params: FamilyParams::default(),
    })
}

/// Quadric bundle of fiber dimension n whose defining form has rank r on
/// the split bundle O^(n+2-r) + O(dd)^r over a rational base, twisted so
/// the form is constant. Slope 2 - 2/r: these meet the reference value
/// (n+1) fiber_top / h0 only in the full-rank case r = n + 2 and drop
/// below it for every smaller r.
pub fn family_quadric_low_rank(
    n: u32,
    r: u64,
    dd: i64,
) -> Result<FamilyInvariants, FamilyError> {
    if r < 3 || r > u64::from(n) + 2 {
        return Err(FamilyError::RankRange(format!(
            "form rank must lie in 3..={}, got {}",
            u64::from(n) + 2,
            r
        )));
    }
    if dd < 1 {
        return Err(FamilyError::ParamRange(
            "summand degree dd must be at least 1".into(),
        ));
    }
    let rank = u64::from(n) + 2;
    let degree = BigRational::from_integer(BigInt::from(r) * BigInt::from(dd));
    let e = BundleOnCurve::new(rank, degree, BigRational::zero())?;
    let deg_a = BigRational::from_integer(BigInt::from(-2 * dd));
    family_quadric(&e, &deg_a)
}

/// Two-stage scroll data: a rank-2 bundle E on the base curve and, on the
/// ruled surface P(E), the split bundle with summands d_i h + a_i f. The
/// twists are admissible when a_i + d_i mu_minus(E) >= 0, which keeps the
/// polarization nef.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ScrollRaw", into = "ScrollRaw")]
pub struct ScrollFamily {
    bundle: BundleOnCurve,
    fiber_degrees: Vec<i64>,
    twists: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
struct ScrollRaw {
    bundle: BundleOnCurve,
    fiber_degrees: Vec<i64>,
    twists: Vec<String>,
}

impl TryFrom<ScrollRaw> for ScrollFamily {
    type Error = FamilyError;

    fn try_from(raw: ScrollRaw) -> Result<Self, FamilyError> {
        let twists = raw
            .twists
            .iter()
            .map(|s| parse_ratio(s).map_err(FamilyError::ParamRange))
            .collect::<Result<Vec<_>, _>>()?;
        ScrollFamily::new(raw.bundle, raw.fiber_degrees, twists)
    }
}

impl From<ScrollFamily> for ScrollRaw {
    fn from(s: ScrollFamily) -> ScrollRaw {
        ScrollRaw {
            bundle: s.bundle,
            fiber_degrees: s.fiber_degrees,
            twists: s.twists.iter().map(format_ratio).collect(),
        }
    }
}

impl ScrollFamily {
    pub fn new(
        bundle: BundleOnCurve,
        fiber_degrees: Vec<i64>,
        twists: Vec<BigRational>,
    ) -> Result<Self, FamilyError> {
        if bundle.rank() != 2 {
            return Err(FamilyError::WrongRank {
                expected: 2,
                got: bundle.rank(),
            });
        }
        if fiber_degrees.is_empty() || fiber_degrees.len() != twists.len() {
            return Err(FamilyError::ParamRange(
                "need equally many fiber degrees and twists, at least one each".into(),
            ));
        }
        if fiber_degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(FamilyError::ParamRange(
                "fiber degrees must be nonincreasing".into(),
            ));
        }
        if *fiber_degrees.last().unwrap() < 0 || fiber_degrees[0] < 1 {
            return Err(FamilyError::ParamRange(
                "fiber degrees must be nonnegative with a positive leading entry".into(),
            ));
        }
        for (d, a) in fiber_degrees.iter().zip(&twists) {
            if (a + BigRational::from_integer((*d).into()) * bundle.mu_minus()).is_negative() {
                return Err(FamilyError::AssumptionViolated(format!(
                    "twist {} is below the nef threshold for fiber degree {}",
                    format_ratio(a),
                    d
                )));
            }
        }
        Ok(ScrollFamily {
            bundle,
            fiber_degrees,
            twists,
        })
    }

    pub fn bundle(&self) -> &BundleOnCurve {
        &self.bundle
    }

    pub fn fiber_degrees(&self) -> &[i64] {
        &self.fiber_degrees
    }

    pub fn twists(&self) -> &[BigRational] {
        &self.twists
    }

    pub fn fiber_dim(&self) -> u32 {
        self.fiber_degrees.len() as u32
    }
}

/// Invariants of the scroll family: fibers are the images of
/// P(+ O(d_i)) under the tautological system, of degree sum d_i in
/// P^(h0 - 1) with h0 = sum (d_i + 1).
pub fn family_scroll(s: &ScrollFamily) -> FamilyInvariants {
    let deg_e = s.bundle.degree();
    let n = s.fiber_dim();
    let total: i64 = s.fiber_degrees.iter().sum();
    let sq: i64 = s.fiber_degrees.iter().map(|d| d * d).sum();
    let twist_sum: BigRational = s.twists.iter().sum();
    let weighted: BigRational = s
        .fiber_degrees
        .iter()
        .zip(&s.twists)
        .map(|(d, a)| BigRational::from_integer((*d).into()) * a)
        .sum();

    // (sum_i d_i^2 + sum_{i<j} d_i d_j) deg E + 2 sum d_i a_i
    //   + sum_{i != j} d_i a_j, collected over a common denominator.
    let top = BigRational::from_integer(BigInt::from(total * total + sq)) / rat_u(2) * deg_e
        + &weighted
        + BigRational::from_integer(total.into()) * &twist_sum;
    let push = s
        .fiber_degrees
        .iter()
        .zip(&s.twists)
        .map(|(d, a)| {
            BigRational::from_integer(BigInt::from(d * (d + 1) / 2)) * deg_e
                + BigRational::from_integer(BigInt::from(d + 1)) * a
        })
        .sum::<BigRational>();

    FamilyInvariants {
        n,
        top_self: top,
        push_deg: push,
        h0: BigInt::from(total) + BigInt::from(n),
        fiber_top: BigRational::from_integer(total.into()),
        flags: embedded_flags(),
        params: FamilyParams::default(),
    }
}

/// Slope of the scroll family in the limit of a large leading twist: the
/// ratio of the a_1-coefficients of top and pushforward,
/// (d_1 + sum d_i) / (d_1 + 1).
pub fn scroll_slope_limit(fiber_degrees: &[i64]) -> Result<BigRational, FamilyError> {
    let Some(&d1) = fiber_degrees.first() else {
        return Err(FamilyError::ParamRange("need at least one fiber degree".into()));
    };
    let total: i64 = fiber_degrees.iter().sum();
    Ok(BigRational::new(
        BigInt::from(d1 + total),
        BigInt::from(d1 + 1),
    ))
}

/// Double cover data: the base family plus the branch parameters. The
/// branch divisor is twice an ample enough class, pulled back from the
/// listed base family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "base", rename_all = "snake_case")]
pub enum DoubleCoverSpec {
    Pn {
        bundle: BundleOnCurve,
        m: i64,
    },
    Veronese {
        bundle: BundleOnCurve,
        m: i64,
    },
    Quadric {
        bundle: BundleOnCurve,
        #[serde(with = "ratio_string")]
        deg_a: BigRational,
        m: i64,
    },
    Scroll {
        scroll: ScrollFamily,
        alpha: i64,
        #[serde(with = "ratio_string")]
        beta: BigRational,
    },
}

fn doubled_from(
    mut inv: FamilyInvariants,
    kodaira_nonneg: bool,
    curve_special: bool,
) -> FamilyInvariants {
    let two = rat_u(2);
    inv.top_self = &inv.top_self * &two;
    inv.fiber_top = &inv.fiber_top * &two;
    inv.flags.birational = false;
    inv.flags.kodaira_nonneg = kodaira_nonneg;
    inv.flags.curve_special = curve_special;
    inv
}

/// Invariants of the double cover branched along twice the m-th power of
/// the polarization (alpha, beta for scrolls), polarized by the pullback.
/// Top self-intersection and fiber degree double, the pushforward is
/// unchanged because the extra summand has fiberwise negative degree, so
/// the slope is exactly twice the slope downstairs.
pub fn family_double_cover(spec: &DoubleCoverSpec) -> Result<FamilyInvariants, FamilyError> {
    match spec {
        DoubleCoverSpec::Pn { bundle, m } => {
            if *m < 2 {
                return Err(FamilyError::BranchTooSmall(
                    "projective space covers need m >= 2".into(),
                ));
            }
            let base = family_pn(bundle)?;
            let n = base.n;
            Ok(doubled_from(
                base,
                *m >= i64::from(n) + 1,
                n == 1 && *m >= 3,
            ))
        }
        DoubleCoverSpec::Veronese { bundle, m } => {
            if *m < 3 {
                return Err(FamilyError::BranchTooSmall(
                    "conic system covers need m >= 3".into(),
                ));
            }
            let base = family_veronese(bundle)?;
            Ok(doubled_from(base, true, false))
        }
        DoubleCoverSpec::Quadric { bundle, deg_a, m } => {
            if *m < 2 {
                return Err(FamilyError::BranchTooSmall(
                    "quadric bundle covers need m >= 2".into(),
                ));
            }
            let base = family_quadric(bundle, deg_a)?;
            let n = base.n;
            Ok(doubled_from(base, *m >= i64::from(n), false))
        }
        DoubleCoverSpec::Scroll {
            scroll,
            alpha,
            beta,
        } => {
            if *alpha < 2 {
                return Err(FamilyError::BranchTooSmall(
                    "scroll covers need alpha >= 2".into(),
                ));
            }
            let d_min = *scroll.fiber_degrees().last().unwrap();
            let low = BigRational::from_integer(BigInt::from(alpha * d_min)) + beta;
            if !low.is_positive() {
                return Err(FamilyError::BranchTooSmall(
                    "branch class needs alpha d_min + beta > 0".into(),
                ));
            }
            Ok(doubled_from(family_scroll(scroll), false, false))
        }
    }
}
