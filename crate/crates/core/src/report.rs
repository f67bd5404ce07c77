//! Report rows shared by the checking engines.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Verified algebraically and holds.
    Pass,
    /// Verified algebraically and fails.
    Fail,
    /// Search ran out of bound; neither proved nor refuted.
    Inconclusive,
    /// Holds by a cited theorem given the verified rows; not computed.
    FollowsByTheorem,
    NotChecked,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Inconclusive => "inconclusive",
            Outcome::FollowsByTheorem => "follows-by-theorem",
            Outcome::NotChecked => "not-checked",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub check: String,
    pub outcome: Outcome,
    pub detail: String,
}

impl CheckRow {
    pub fn new(check: impl Into<String>, outcome: Outcome, detail: impl Into<String>) -> Self {
        CheckRow {
            check: check.into(),
            outcome,
            detail: detail.into(),
        }
    }

    pub fn verdict(check: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(check, if ok { Outcome::Pass } else { Outcome::Fail }, detail)
    }
}

impl fmt::Display for CheckRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.detail.is_empty() {
            write!(f, "{}: {}", self.check, self.outcome)
        } else {
            write!(f, "{}: {} ({})", self.check, self.outcome, self.detail)
        }
    }
}

/// True when no row failed or stayed inconclusive.
pub fn all_pass(rows: &[CheckRow]) -> bool {
    rows.iter().all(|r| {
        matches!(
            r.outcome,
            Outcome::Pass | Outcome::FollowsByTheorem | Outcome::NotChecked
        )
    })
}
