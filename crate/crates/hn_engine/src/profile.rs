//! Harder-Narasimhan profiles: the (cumulative rank, slope) staircase of a
//! filtered bundle on a curve, with the degree identities that make the
//! staircase usable as a bookkeeping device.

use num::traits::Signed;
use num::{BigInt, BigRational, Zero};
use serde::{Deserialize, Serialize};

use crate::error::HnError;
use slope_theorems::ratio::ratio_string;

/// One step of the staircase: `rank` is cumulative, `slope` is the slope of
/// the corresponding graded piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HNStep {
    pub rank: u64,
    #[serde(with = "ratio_string")]
    pub slope: BigRational,
}

/// A validated profile: ranks strictly increase, slopes strictly decrease,
/// and there is at least one step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HNProfile {
    steps: Vec<HNStep>,
}

impl HNProfile {
    pub fn new(steps: Vec<(u64, BigRational)>) -> Result<Self, HnError> {
        let steps: Vec<HNStep> = steps
            .into_iter()
            .map(|(rank, slope)| HNStep { rank, slope })
            .collect();
        validate_steps(&steps)?;
        Ok(HNProfile { steps })
    }

    pub fn steps(&self) -> &[HNStep] {
        &self.steps
    }

    /// Number of steps, written `l` elsewhere in this crate.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn total_rank(&self) -> u64 {
        self.steps.last().expect("validated nonempty").rank
    }

    /// Slope of the `i`-th step, 1-based.
    pub fn slope(&self, i: usize) -> &BigRational {
        &self.steps[i - 1].slope
    }

    /// Total degree of the filtered bundle.
    ///
    /// Computed as sum of slope_i * (r_i - r_{i-1}) with r_0 = 0, and
    /// cross-checked against the summation-by-parts form
    /// sum of r_i * (slope_i - slope_{i+1}) with slope_{l+1} = 0.
    pub fn pushforward_degree(&self) -> BigRational {
        let mut by_pieces = BigRational::zero();
        let mut prev_rank = 0u64;
        for step in &self.steps {
            let jump = BigInt::from(step.rank - prev_rank);
            by_pieces += &step.slope * BigRational::from(jump);
            prev_rank = step.rank;
        }

        let mut by_parts = BigRational::zero();
        for (idx, step) in self.steps.iter().enumerate() {
            let next_slope = self
                .steps
                .get(idx + 1)
                .map(|s| s.slope.clone())
                .unwrap_or_else(BigRational::zero);
            by_parts += BigRational::from(BigInt::from(step.rank)) * (&step.slope - next_slope);
        }

        assert_eq!(by_pieces, by_parts, "degree identities disagree");
        by_pieces
    }

    /// Nefness of the associated tautological class: the smallest slope is
    /// the one that decides.
    pub fn is_nef(&self) -> bool {
        !self.steps.last().expect("validated nonempty").slope.is_negative()
    }
}

fn validate_steps(steps: &[HNStep]) -> Result<(), HnError> {
    if steps.is_empty() {
        return Err(HnError::EmptyProfile);
    }
    let mut prev_rank = 0u64;
    for step in steps {
        if step.rank <= prev_rank {
            return Err(HnError::NotStrictlyIncreasingRanks);
        }
        prev_rank = step.rank;
    }
    for pair in steps.windows(2) {
        if pair[1].slope >= pair[0].slope {
            return Err(HnError::NotStrictlyDecreasingSlopes);
        }
    }
    Ok(())
}

impl<'de> Deserialize<'de> for HNProfile {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            steps: Vec<HNStep>,
        }
        let raw = Raw::deserialize(deserializer)?;
        validate_steps(&raw.steps).map_err(serde::de::Error::custom)?;
        Ok(HNProfile { steps: raw.steps })
    }
}
