//! Numerical intersection tables over a staircase of nested subsheaf classes.
//!
//! A model records, for `classes = l + 1` divisor classes on an ambient
//! (n+1)-fold, every degree-n product as a rational number. Keys are sorted
//! multisets of 1-based class indices.

use std::collections::BTreeMap;

use num::traits::Signed;
use num::{BigRational, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::HnError;
use crate::profile::HNProfile;
use slope_theorems::ratio::{format_ratio, parse_ratio};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionModel {
    n: u32,
    classes: u32,
    table: BTreeMap<Vec<u32>, BigRational>,
}

impl IntersectionModel {
    /// Builds and validates a model. Keys may arrive unsorted; they are
    /// normalized. The table must contain every size-n multiset over
    /// `1..=classes` exactly once, with nonnegative values.
    pub fn new(
        n: u32,
        classes: u32,
        entries: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Result<Self, HnError> {
        let mut table = BTreeMap::new();
        for (mut key, value) in entries {
            if key.len() != n as usize {
                return Err(HnError::ModelMismatch(format!(
                    "row {:?} has {} indices, expected {}",
                    key,
                    key.len(),
                    n
                )));
            }
            if key.iter().any(|&i| i == 0 || i > classes) {
                return Err(HnError::ModelMismatch(format!(
                    "row {:?} mentions a class outside 1..={}",
                    key, classes
                )));
            }
            key.sort_unstable();
            if value.is_negative() {
                return Err(HnError::NegativeEntry(format!("{:?}", key)));
            }
            if table.insert(key.clone(), value).is_some() {
                return Err(HnError::ModelMismatch(format!("duplicate row {:?}", key)));
            }
        }
        for key in multisets(n, classes) {
            if !table.contains_key(&key) {
                return Err(HnError::IncompleteTable(format!("{:?}", key)));
            }
        }
        Ok(IntersectionModel { n, classes, table })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> u32 {
        self.classes
    }

    /// Looks up one product; the key need not be sorted.
    pub fn value(&self, indices: &[u32]) -> Option<&BigRational> {
        let mut key = indices.to_vec();
        key.sort_unstable();
        self.table.get(&key)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.table.iter()
    }

    /// Optional extra sanity check: values must not decrease when any index
    /// is bumped to a bigger class. Checking single increments suffices.
    pub fn is_monotone(&self) -> bool {
        for (key, value) in &self.table {
            for pos in 0..key.len() {
                if key[pos] < self.classes {
                    let mut bumped = key.clone();
                    bumped[pos] += 1;
                    bumped.sort_unstable();
                    if self.table[&bumped] < *value {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All size-n multisets over `1..=classes`, as sorted vectors in
/// lexicographic order.
pub fn multisets(n: u32, classes: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n as usize);
    fill(&mut out, &mut cur, 1, n, classes);
    out
}

fn fill(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, lo: u32, left: u32, classes: u32) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for c in lo..=classes {
        cur.push(c);
        fill(out, cur, c, left - 1, classes);
        cur.pop();
    }
}

/// How the auxiliary (l+1)-st class is given a slope when the profile only
/// pins down the first l.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtraClassChoice {
    /// Reuse the last step's slope.
    ReuseLast,
    /// The extra class is a pullback from the base, slope zero.
    PullbackL,
    /// The extra class is the terminal subsheaf class itself, slope zero.
    MEll,
}

impl ExtraClassChoice {
    pub fn mu_extra(&self, profile: &HNProfile) -> BigRational {
        match self {
            ExtraClassChoice::ReuseLast => profile
                .steps()
                .last()
                .expect("validated nonempty")
                .slope
                .clone(),
            ExtraClassChoice::PullbackL | ExtraClassChoice::MEll => BigRational::zero(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ModelRow {
    indices: Vec<u32>,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct ModelRaw {
    n: u32,
    classes: u32,
    table: Vec<ModelRow>,
}

impl Serialize for IntersectionModel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = ModelRaw {
            n: self.n,
            classes: self.classes,
            table: self
                .table
                .iter()
                .map(|(indices, value)| ModelRow {
                    indices: indices.clone(),
                    value: format_ratio(value),
                })
                .collect(),
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntersectionModel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ModelRaw::deserialize(deserializer)?;
        let mut entries = Vec::with_capacity(raw.table.len());
        for row in raw.table {
            let value = parse_ratio(&row.value).map_err(D::Error::custom)?;
            entries.push((row.indices, value));
        }
        IntersectionModel::new(raw.n, raw.classes, entries).map_err(D::Error::custom)
    }
}
