//! Uniform result record for every inequality checker in the workspace.
//!
//! A `CheckReport` always carries both sides of the comparison exactly, so a
//! caller can re-derive the verdict. `slack = lhs - rhs`; `holds` means
//! `slack >= 0`. When a hypothesis needed to even state the inequality fails,
//! `hypothesis_ok` is false, both sides are reported as zero, and `notes`
//! names the failed hypothesis.

use crate::error::SlopeError;
use crate::ratio::ratio_string;
use num::rational::BigRational;
use num::traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    XiaoH1,
    XiaoH2,
    XiaoBir1,
    XiaoBir2,
    Barja1,
    Barja2,
    Ksb1,
    Ksb2,
    Ksb3,
    Ksb4,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::XiaoH1,
        TheoremId::XiaoH2,
        TheoremId::XiaoBir1,
        TheoremId::XiaoBir2,
        TheoremId::Barja1,
        TheoremId::Barja2,
        TheoremId::Ksb1,
        TheoremId::Ksb2,
        TheoremId::Ksb3,
        TheoremId::Ksb4,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::XiaoH1 => "XIAO_H1",
            TheoremId::XiaoH2 => "XIAO_H2",
            TheoremId::XiaoBir1 => "XIAO_BIR1",
            TheoremId::XiaoBir2 => "XIAO_BIR2",
            TheoremId::Barja1 => "BARJA_1",
            TheoremId::Barja2 => "BARJA_2",
            TheoremId::Ksb1 => "KSB_1",
            TheoremId::Ksb2 => "KSB_2",
            TheoremId::Ksb3 => "KSB_3",
            TheoremId::Ksb4 => "KSB_4",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = SlopeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| SlopeError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub theorem: String,
    #[serde(with = "ratio_string")]
    pub lhs: BigRational,
    #[serde(with = "ratio_string")]
    pub rhs: BigRational,
    pub holds: bool,
    #[serde(with = "ratio_string")]
    pub slack: BigRational,
    pub hypothesis_ok: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    /// Compares the two sides; `holds` iff `lhs >= rhs`.
    pub fn evaluated(theorem: impl Into<String>, lhs: BigRational, rhs: BigRational) -> Self {
        let slack = &lhs - &rhs;
        CheckReport {
            theorem: theorem.into(),
            holds: !slack.is_negative(),
            lhs,
            rhs,
            slack,
            hypothesis_ok: true,
            notes: Vec::new(),
        }
    }

    /// A check whose hypotheses fail is neither true nor false; both sides
    /// are zeroed and the note says which hypothesis broke.
    pub fn hypothesis_failed(theorem: impl Into<String>, note: impl Into<String>) -> Self {
        CheckReport {
            theorem: theorem.into(),
            lhs: BigRational::zero(),
            rhs: BigRational::zero(),
            holds: false,
            slack: BigRational::zero(),
            hypothesis_ok: false,
            notes: vec![note.into()],
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

trait IsNegative {
    fn is_negative(&self) -> bool;
}

impl IsNegative for BigRational {
    fn is_negative(&self) -> bool {
        *self < BigRational::zero()
    }
}
