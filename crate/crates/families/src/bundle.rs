use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use slope_theorems::ratio::ratio_string;

use crate::error::FamilyError;

/// Numerical shadow of a vector bundle on a smooth curve: its rank, its
/// degree, and the slope of the minimal destabilising quotient. The last
/// field is what nefness can be read from, so it is part of the data
/// rather than something we try to recompute.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BundleRaw")]
pub struct BundleOnCurve {
    rank: u64,
    #[serde(with = "ratio_string")]
    degree: BigRational,
    #[serde(with = "ratio_string")]
    mu_minus: BigRational,
}

#[derive(Deserialize)]
struct BundleRaw {
    rank: u64,
    #[serde(with = "ratio_string")]
    degree: BigRational,
    #[serde(with = "ratio_string")]
    mu_minus: BigRational,
}

impl TryFrom<BundleRaw> for BundleOnCurve {
    type Error = FamilyError;

    fn try_from(raw: BundleRaw) -> Result<Self, FamilyError> {
        BundleOnCurve::new(raw.rank, raw.degree, raw.mu_minus)
    }
}

impl BundleOnCurve {
    /// The minimal slope can never exceed the mean slope degree/rank;
    /// that is the only shape constraint on the data.
    pub fn new(rank: u64, degree: BigRational, mu_minus: BigRational) -> Result<Self, FamilyError> {
        if rank == 0 {
            return Err(FamilyError::RankRange("rank must be at least 1".into()));
        }
        let mean = &degree / BigRational::from_integer(BigInt::from(rank));
        if mu_minus > mean {
            return Err(FamilyError::AssumptionViolated(
                "minimal slope exceeds the mean slope".into(),
            ));
        }
        Ok(BundleOnCurve {
            rank,
            degree,
            mu_minus,
        })
    }

    /// Split bundle with all summands of the same integer degree; the
    /// minimal slope is then the common degree.
    pub fn split_balanced(rank: u64, summand_degree: i64) -> Result<Self, FamilyError> {
        let deg = BigRational::from_integer(BigInt::from(summand_degree) * BigInt::from(rank));
        BundleOnCurve::new(rank, deg, BigRational::from_integer(BigInt::from(summand_degree)))
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn degree(&self) -> &BigRational {
        &self.degree
    }

    pub fn mu_minus(&self) -> &BigRational {
        &self.mu_minus
    }

    pub fn slope(&self) -> BigRational {
        &self.degree / BigRational::from_integer(BigInt::from(self.rank))
    }

    /// Nef on a curve means every quotient has nonnegative degree.
    pub fn is_nef(&self) -> bool {
        !self.mu_minus.is_negative()
    }
}

pub(crate) fn binomial(n: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Rank and degree of the k-th symmetric power. The rank is the count of
/// degree-k monomials in rank(E) variables and the degree is
/// rank' * k * slope(E), both exact.
pub fn sym_power_degree(e: &BundleOnCurve, k: u64) -> (BigInt, BigRational) {
    let new_rank = binomial(&BigInt::from(e.rank + k - 1), k);
    if k == 0 {
        return (BigInt::one(), BigRational::zero());
    }
    let deg = BigRational::from_integer(&new_rank * BigInt::from(k)) * e.slope();
    (new_rank, deg)
}

/// Symmetric power as a bundle: the minimal slope scales linearly with k.
pub fn sym_power(e: &BundleOnCurve, k: u64) -> Result<BundleOnCurve, FamilyError> {
    use num::traits::ToPrimitive;
    let (rank, degree) = sym_power_degree(e, k);
    let rank = rank
        .to_u64()
        .ok_or_else(|| FamilyError::RankRange("symmetric power rank overflows u64".into()))?;
    let mu = e.mu_minus() * BigRational::from_integer(BigInt::from(k));
    BundleOnCurve::new(rank, degree, mu)
}
