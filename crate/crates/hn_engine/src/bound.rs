//! Lower bounds for the top self-intersection of a nef tautological class,
//! obtained by pushing the class across a staircase of subsheaf classes.
//!
//! Everything funnels through `xiao_bound_general`, a double sum indexed by a
//! chosen subsequence `seq_s` of staircase steps and a nondecreasing band
//! schedule `seq_m`. The classical one-parameter bounds are also provided in
//! closed form; they agree with the general sum at specific schedules, and
//! the test suite holds them to that.

use num::traits::One;
use num::{BigRational, BigUint, Zero};

use crate::error::HnError;
use crate::model::{multisets, ExtraClassChoice, IntersectionModel};
use crate::profile::HNProfile;

/// Candidate budget above which `best_xiao_bound` stops enumerating every
/// schedule and falls back to the canonical ones.
pub const DEFAULT_SEARCH_CAP: u64 = 100_000;

fn check_model(profile: &HNProfile, model: &IntersectionModel) -> Result<(), HnError> {
    let wanted = profile.len() as u32 + 1;
    if model.classes() != wanted {
        return Err(HnError::ModelMismatch(format!(
            "model carries {} classes, profile needs {}",
            model.classes(),
            wanted
        )));
    }
    Ok(())
}

fn validate_seq_s(seq_s: &[u32], l: u32) -> Result<(), HnError> {
    if seq_s.len() < 2 {
        return Err(HnError::InvalidSequence(
            "seq_s needs at least one chosen step plus the terminal index".into(),
        ));
    }
    if seq_s[0] == 0 {
        return Err(HnError::InvalidSequence("step indices are 1-based".into()));
    }
    if !seq_s.windows(2).all(|w| w[0] < w[1]) {
        return Err(HnError::InvalidSequence(
            "seq_s must be strictly increasing".into(),
        ));
    }
    if *seq_s.last().unwrap() != l + 1 {
        return Err(HnError::InvalidSequence(format!(
            "seq_s must end at the terminal index {}",
            l + 1
        )));
    }
    Ok(())
}

fn validate_seq_m(seq_m: &[u32], n: u32, q: u32) -> Result<(), HnError> {
    if seq_m.len() != n as usize + 2 {
        return Err(HnError::InvalidSequence(format!(
            "seq_m needs exactly {} entries",
            n + 2
        )));
    }
    if seq_m[0] != 1 {
        return Err(HnError::InvalidSequence("seq_m must start at 1".into()));
    }
    if *seq_m.last().unwrap() != q + 1 {
        return Err(HnError::InvalidSequence(format!(
            "seq_m must end at {}",
            q + 1
        )));
    }
    if !seq_m.windows(2).all(|w| w[0] <= w[1]) {
        return Err(HnError::InvalidSequence(
            "seq_m must be nondecreasing".into(),
        ));
    }
    Ok(())
}

/// The master lower bound.
///
/// With `q + 1 = seq_s.len()` and slopes `mu` read off the profile (the
/// terminal index gets its slope from `extra`), computes
///
/// ```text
/// sum over bands i = 0..=n, steps j = m_i..m_{i+1}-1 of
///   ( sum_{k=0}^{i} [s_j^k s_{j+1}^{i-k} s_{m_{i+1}} ... s_{m_n}] )
///   * (mu_{s_j} - mu_{s_{j+1}})
/// ```
///
/// where brackets are table lookups on size-n multisets. Empty bands
/// contribute nothing.
pub fn xiao_bound_general(
    profile: &HNProfile,
    model: &IntersectionModel,
    extra: ExtraClassChoice,
    seq_s: &[u32],
    seq_m: &[u32],
) -> Result<BigRational, HnError> {
    check_model(profile, model)?;
    let l = profile.len() as u32;
    let n = model.n();
    validate_seq_s(seq_s, l)?;
    let q = seq_s.len() as u32 - 1;
    validate_seq_m(seq_m, n, q)?;

    // 1-based slope of the j-th chosen step
    let mu = |j: u32| -> BigRational {
        let s = seq_s[j as usize - 1];
        if s == l + 1 {
            extra.mu_extra(profile)
        } else {
            profile.slope(s as usize).clone()
        }
    };

    let mut total = BigRational::zero();
    for i in 0..=n {
        let band_lo = seq_m[i as usize];
        let band_hi = seq_m[i as usize + 1];
        for j in band_lo..band_hi {
            let s_j = seq_s[j as usize - 1];
            let s_next = seq_s[j as usize];
            let mut coeff = BigRational::zero();
            for k in 0..=i {
                let mut key = Vec::with_capacity(n as usize);
                key.extend(std::iter::repeat(s_j).take(k as usize));
                key.extend(std::iter::repeat(s_next).take((i - k) as usize));
                for t in (i + 1)..=n {
                    key.push(seq_s[seq_m[t as usize] as usize - 1]);
                }
                coeff += model.value(&key).expect("validated table").clone();
            }
            total += coeff * (mu(j) - mu(j + 1));
        }
    }
    Ok(total)
}

/// Every step paired against the terminal class:
/// `sum_j (P_j + P_{j+1}) P_{l+1}^{n-1} (mu_j - mu_{j+1})`.
pub fn xiao_bound_1a(
    profile: &HNProfile,
    model: &IntersectionModel,
    extra: ExtraClassChoice,
) -> Result<BigRational, HnError> {
    check_model(profile, model)?;
    let n = positive_fiber_dim(model)?;
    let l = profile.len() as u32;
    let mut total = BigRational::zero();
    for j in 1..=l {
        let coeff = padded_pair(model, j, j + 1, l + 1, n);
        total += coeff * slope_drop(profile, extra, j);
    }
    Ok(total)
}

/// Every step, with the full binomial spread between consecutive classes:
/// `sum_j (sum_k P_j^k P_{j+1}^{n-k}) (mu_j - mu_{j+1})`.
pub fn xiao_bound_1b(
    profile: &HNProfile,
    model: &IntersectionModel,
    extra: ExtraClassChoice,
) -> Result<BigRational, HnError> {
    check_model(profile, model)?;
    let n = model.n();
    let l = profile.len() as u32;
    let mut total = BigRational::zero();
    for j in 1..=l {
        let mut coeff = BigRational::zero();
        for k in 0..=n {
            let mut key = Vec::with_capacity(n as usize);
            key.extend(std::iter::repeat(j).take(k as usize));
            key.extend(std::iter::repeat(j + 1).take((n - k) as usize));
            coeff += model.value(&key).expect("validated table").clone();
        }
        total += coeff * slope_drop(profile, extra, j);
    }
    Ok(total)
}

/// Like the first bound but skipping along a chosen subsequence:
/// `sum_j (P_{s_j} + P_{s_{j+1}}) P_{l+1}^{n-1} (mu_{s_j} - mu_{s_{j+1}})`.
pub fn xiao_bound_2(
    profile: &HNProfile,
    model: &IntersectionModel,
    extra: ExtraClassChoice,
    seq_s: &[u32],
) -> Result<BigRational, HnError> {
    check_model(profile, model)?;
    let n = positive_fiber_dim(model)?;
    let l = profile.len() as u32;
    validate_seq_s(seq_s, l)?;
    let q = seq_s.len() as u32 - 1;
    let mu = |j: u32| -> BigRational {
        let s = seq_s[j as usize - 1];
        if s == l + 1 {
            extra.mu_extra(profile)
        } else {
            profile.slope(s as usize).clone()
        }
    };
    let mut total = BigRational::zero();
    for j in 1..=q {
        let coeff = padded_pair(model, seq_s[j as usize - 1], seq_s[j as usize], l + 1, n);
        total += coeff * (mu(j) - mu(j + 1));
    }
    Ok(total)
}

fn positive_fiber_dim(model: &IntersectionModel) -> Result<u32, HnError> {
    if model.n() == 0 {
        return Err(HnError::ModelMismatch(
            "pairwise bounds need fiber dimension at least 1".into(),
        ));
    }
    Ok(model.n())
}

/// `(P_a + P_b) P_pad^{n-1}` as a table lookup.
fn padded_pair(model: &IntersectionModel, a: u32, b: u32, pad: u32, n: u32) -> BigRational {
    let mut key_a = vec![a];
    let mut key_b = vec![b];
    key_a.extend(std::iter::repeat(pad).take(n as usize - 1));
    key_b.extend(std::iter::repeat(pad).take(n as usize - 1));
    model.value(&key_a).expect("validated table").clone()
        + model.value(&key_b).expect("validated table").clone()
}

fn slope_drop(profile: &HNProfile, extra: ExtraClassChoice, j: u32) -> BigRational {
    let l = profile.len() as u32;
    let next = if j == l {
        extra.mu_extra(profile)
    } else {
        profile.slope(j as usize + 1).clone()
    };
    profile.slope(j as usize) - next
}

/// Schedule at which the general sum collapses to `xiao_bound_1a`:
/// one band of pair terms covering everything, padding by the terminal class.
pub fn seq_m_for_1a(n: u32, q: u32) -> Vec<u32> {
    let mut m = vec![1, 1];
    m.extend(std::iter::repeat(q + 1).take(n as usize));
    m
}

/// Schedule for `xiao_bound_1b`: the top band does all the work.
pub fn seq_m_for_1b(n: u32, q: u32) -> Vec<u32> {
    let mut m = vec![1; n as usize + 1];
    m.push(q + 1);
    m
}

/// Schedule for `xiao_bound_2`; same shape as the first bound.
pub fn seq_m_for_2(n: u32, q: u32) -> Vec<u32> {
    seq_m_for_1a(n, q)
}

/// The identity subsequence `1, 2, ..., l+1`.
pub fn full_seq_s(l: u32) -> Vec<u32> {
    (1..=l + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestBound {
    pub value: BigRational,
    pub seq_s: Vec<u32>,
    pub seq_m: Vec<u32>,
    /// False when the schedule space was larger than the cap and only the
    /// canonical schedules were tried.
    pub exhaustive: bool,
}

/// Maximizes the general bound over all admissible `(seq_s, seq_m)`.
///
/// The space has `sum_q C(l, q) C(q + n, n)` points. If that exceeds
/// `search_cap`, only the canonical schedules are tried: the two
/// full-sequence ones plus the pair schedule for every subsequence. Ties go
/// to the lexicographically smallest pair.
pub fn best_xiao_bound(
    profile: &HNProfile,
    model: &IntersectionModel,
    extra: ExtraClassChoice,
    search_cap: u64,
) -> Result<BestBound, HnError> {
    check_model(profile, model)?;
    let l = profile.len() as u32;
    let n = model.n();

    let mut count = BigUint::zero();
    for q in 1..=l as u64 {
        count += binomial(l as u64, q) * binomial(q + n as u64, n as u64);
    }
    let exhaustive = count <= BigUint::from(search_cap);

    let mut candidates: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for subset in subsets_nonempty(l) {
        let q = subset.len() as u32;
        let mut seq_s = subset;
        seq_s.push(l + 1);
        if exhaustive {
            for mid in multisets(n, q + 1) {
                let mut seq_m = Vec::with_capacity(n as usize + 2);
                seq_m.push(1);
                seq_m.extend(mid);
                seq_m.push(q + 1);
                candidates.push((seq_s.clone(), seq_m));
            }
        } else if n >= 1 {
            candidates.push((seq_s, seq_m_for_2(n, q)));
        }
    }
    if !exhaustive {
        candidates.push((full_seq_s(l), seq_m_for_1b(n, l)));
    }
    candidates.sort();
    candidates.dedup();

    let mut best: Option<BestBound> = None;
    for (seq_s, seq_m) in candidates {
        let value = xiao_bound_general(profile, model, extra, &seq_s, &seq_m)?;
        if best.as_ref().map_or(true, |b| value > b.value) {
            best = Some(BestBound {
                value,
                seq_s,
                seq_m,
                exhaustive,
            });
        }
    }
    Ok(best.expect("at least one candidate schedule"))
}

/// Nonempty subsets of `1..=l` as sorted vectors.
fn subsets_nonempty(l: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    grow(&mut out, &mut cur, 1, l);
    out
}

fn grow(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, next: u32, l: u32) {
    for a in next..=l {
        cur.push(a);
        out.push(cur.clone());
        grow(out, cur, a + 1, l);
        cur.pop();
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}
