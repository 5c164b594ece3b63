//! Pass/fail records produced by the verification routines.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::grouptypes::GroupType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(rename = "type")]
    pub group_type: [u32; 3],
    pub p: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance: Instance,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(t: GroupType, p: u64) -> Self {
        Self {
            instance: Instance {
                group_type: t.exponents(),
                p,
            },
            checks: Vec::new(),
            overall: true,
        }
    }

    /// Records a check that passes iff the renderings of `expected` and
    /// `actual` coincide.
    pub fn compare(&mut self, name: impl Into<String>, expected: impl Display, actual: impl Display) {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        self.push(Check {
            name: name.into(),
            status,
            expected,
            actual,
        });
    }

    pub fn push(&mut self, check: Check) {
        self.overall &= check.status == Status::Pass;
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for check in other.checks {
            self.push(check);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}
