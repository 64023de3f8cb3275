//! Gap estimates for log-concave degree sequences, and the elementary
//! nefness criterion for a twisted bundle pulled back along a finite cover.

use num::{BigInt, BigRational, Zero};

use crate::error::HnError;
use slope_theorems::CheckReport;

const LEMMA_ID: &str = "LOG_CONCAVE_GAPS";

/// For a nondecreasing, log-concave sequence of positive integers
/// `d_0, ..., d_n` with `d_0 >= 2` and a final jump `d_n - d_{n-1} >= 2`,
/// every jump is at least 2 and consequently `d_{n-1} >= d_0 + 2(n-1)`.
///
/// The report evaluates the conclusions and exposes the binding one, the
/// constraint with minimal slack, as `lhs >= rhs`. When a hypothesis fails
/// the report says which one and decides nothing.
pub fn check_log_concave_lemma(d: &[BigInt]) -> Result<CheckReport, HnError> {
    if d.len() < 3 {
        return Err(HnError::TooShort);
    }
    let n = d.len() - 1;

    if let Some(pos) = d.iter().position(|x| x <= &BigInt::zero()) {
        return Ok(CheckReport::hypothesis_failed(
            LEMMA_ID,
            format!("entry {} is not a positive integer", pos),
        ));
    }
    if d[0] < BigInt::from(2) {
        return Ok(CheckReport::hypothesis_failed(
            LEMMA_ID,
            "first degree must be at least 2",
        ));
    }
    if let Some(pos) = (1..=n).find(|&i| d[i] < d[i - 1]) {
        return Ok(CheckReport::hypothesis_failed(
            LEMMA_ID,
            format!("sequence decreases at position {}", pos),
        ));
    }
    if let Some(pos) = (1..n).find(|&i| &d[i] * &d[i] < &d[i - 1] * &d[i + 1]) {
        return Ok(CheckReport::hypothesis_failed(
            LEMMA_ID,
            format!("log-concavity fails at position {}", pos),
        ));
    }
    if &d[n] - &d[n - 1] < BigInt::from(2) {
        return Ok(CheckReport::hypothesis_failed(
            LEMMA_ID,
            "last jump must be at least 2",
        ));
    }

    // conclusions: each jump vs 2, then d_{n-1} vs d_0 + 2(n-1)
    let mut binding: Option<(BigRational, BigRational)> = None;
    let mut consider = |lhs: BigInt, rhs: BigInt| {
        let lhs = BigRational::from(lhs);
        let rhs = BigRational::from(rhs);
        let tighter = match &binding {
            None => true,
            Some((bl, br)) => &lhs - &rhs < bl - br,
        };
        if tighter {
            binding = Some((lhs, rhs));
        }
    };
    for i in 1..=n {
        consider(&d[i] - &d[i - 1], BigInt::from(2));
    }
    consider(d[n - 1].clone(), &d[0] + BigInt::from(2 * (n as i64 - 1)));

    let (lhs, rhs) = binding.expect("at least one conclusion");
    Ok(CheckReport::evaluated(LEMMA_ID, lhs, rhs))
}

/// A bundle with minimal slope `mu_minus`, pulled back along a degree-`d`
/// cover and twisted by a line bundle of degree `deg_a`, stays nef exactly
/// when `d >= 0` and `d * mu_minus + deg_a >= 0`.
pub fn miyaoka_nef_check(mu_minus: &BigRational, d: &BigInt, deg_a: &BigRational) -> bool {
    if d < &BigInt::zero() {
        return false;
    }
    BigRational::from(d.clone()) * mu_minus + deg_a >= BigRational::zero()
}
