//! Monomial counting and intersection data for weighted projective spaces.
//!
//! A weight vector `a = (a_0, ..., a_{n+1})` determines the graded polynomial
//! ring `S(a) = k[x_0, ..., x_{n+1}]` with `deg x_i = a_i` and the space
//! `P(a) = Proj S(a)` of dimension `n + 1`. Everything here is exact: weights
//! are arbitrary-precision integers and intersection numbers are rationals.

use num::bigint::{BigInt, BigUint};
use num::integer::Integer;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Default leaf budget for [`graded_dim_oracle`].
pub const DEFAULT_ENUM_CAP: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WpsError {
    #[error("a weight vector needs at least two entries")]
    TooFewWeights,
    #[error("weights must be positive")]
    NonpositiveWeight,
    #[error("enumeration would visit {bound} exponent tuples, over the cap {cap}")]
    CapExceeded { bound: BigUint, cap: u64 },
    #[error("cohomology index {index} out of range for a space of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
}

/// Positive integer weights, at least two of them.
///
/// Serializes as a plain JSON array of integers, so every weight must fit in
/// a `u64` to cross the JSON boundary; in-memory weights are unbounded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<BigInt>);

impl WeightVector {
    pub fn new(weights: Vec<BigInt>) -> Result<Self, WpsError> {
        if weights.len() < 2 {
            return Err(WpsError::TooFewWeights);
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(WpsError::NonpositiveWeight);
        }
        Ok(WeightVector(weights))
    }

    pub fn from_u64s(weights: &[u64]) -> Result<Self, WpsError> {
        Self::new(weights.iter().map(|&w| BigInt::from(w)).collect())
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Dimension of `P(a)`: one less than the number of weights.
    pub fn space_dim(&self) -> usize {
        self.0.len() - 1
    }

    /// `|a|`, the sum of the weights.
    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn product(&self) -> BigInt {
        self.0.iter().product()
    }

    /// True when dropping any single weight leaves a coprime set.
    pub fn is_well_formed(&self) -> bool {
        let n = self.0.len();
        let mut prefix = vec![BigInt::zero(); n + 1];
        for i in 0..n {
            prefix[i + 1] = prefix[i].gcd(&self.0[i]);
        }
        let mut suffix = vec![BigInt::zero(); n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1].gcd(&self.0[i]);
        }
        (0..n).all(|i| prefix[i].gcd(&suffix[i + 1]).is_one())
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for w in &self.0 {
            let small = w
                .to_u64()
                .ok_or_else(|| serde::ser::Error::custom("weight too large for a JSON integer"))?;
            seq.serialize_element(&small)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<u64>::deserialize(deserializer)?;
        WeightVector::from_u64s(&raw).map_err(serde::de::Error::custom)
    }
}

/// `dim S(a)_m`, the number of monomials of weighted degree `m`.
///
/// Computed by a one-dimensional knapsack table, one weight at a time.
pub fn graded_dim(a: &WeightVector, m: &BigInt) -> BigUint {
    if m.is_negative() {
        return BigUint::zero();
    }
    let m = m
        .to_usize()
        .expect("graded piece degree too large to tabulate");
    let mut dp = vec![BigUint::zero(); m + 1];
    dp[0] = BigUint::one();
    for w in a.weights() {
        let Some(w) = w.to_usize() else { continue };
        if w > m || w == 0 {
            continue;
        }
        for j in w..=m {
            let add = dp[j - w].clone();
            dp[j] += add;
        }
    }
    dp[m].clone()
}

/// Counts the same monomials by direct enumeration of exponent tuples.
///
/// Exponents of all but the last variable are enumerated outright and the
/// last is a divisibility check, so the leaf count is the product of
/// `m / a_i + 1` over the leading weights. That predicted count is checked
/// against `cap` before any enumeration happens.
pub fn graded_dim_oracle(a: &WeightVector, m: &BigInt, cap: u64) -> Result<BigUint, WpsError> {
    if m.is_negative() {
        return Ok(BigUint::zero());
    }
    let ws = a.weights();
    let mut bound = BigUint::one();
    for w in &ws[..ws.len() - 1] {
        bound *= (m / w + BigInt::one()).to_biguint().expect("nonnegative");
    }
    if bound > BigUint::from(cap) {
        return Err(WpsError::CapExceeded { bound, cap });
    }
    Ok(enumerate(ws, m.clone()))
}

fn enumerate(ws: &[BigInt], rem: BigInt) -> BigUint {
    if ws.len() == 1 {
        return if (&rem % &ws[0]).is_zero() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let mut total = BigUint::zero();
    let mut left = rem;
    while !left.is_negative() {
        total += enumerate(&ws[1..], left.clone());
        left -= &ws[0];
    }
    total
}

/// Smallest `m` such that `m H` is Cartier: the lcm of the weights.
pub fn cartier_index(a: &WeightVector) -> BigInt {
    a.weights().iter().fold(BigInt::one(), |acc, w| acc.lcm(w))
}

/// `H^{n+1} = 1 / (a_0 ... a_{n+1})` for the tautological class `H` on `P(a)`.
pub fn taut_top_self_intersection(a: &WeightVector) -> BigRational {
    BigRational::new(BigInt::one(), a.product())
}

/// `K_{P(a)} = c H` with `c = -|a|`.
pub fn canonical_coefficient(a: &WeightVector) -> BigInt {
    -a.total()
}

/// `h^i(P(a), O(m))`: `dim S_m` at `i = 0`, `dim S_{-m-|a|}` at the top
/// index, zero strictly in between.
pub fn wps_cohomology_dim(a: &WeightVector, m: &BigInt, i: usize) -> Result<BigUint, WpsError> {
    let dim = a.space_dim();
    if i > dim {
        return Err(WpsError::IndexOutOfRange { index: i, dim });
    }
    Ok(if i == 0 {
        graded_dim(a, m)
    } else if i == dim {
        graded_dim(a, &(-m - a.total()))
    } else {
        BigUint::zero()
    })
}
