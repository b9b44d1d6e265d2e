use serde::Serialize;

use crate::analyze::{CheckResult, InvariantResult, Status};
use crate::spec::ObjectKind;

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionSummary {
    pub name: String,
    pub kind: String,
    pub object: ObjectKind,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuiverFile {
    pub target: String,
    pub file: String,
}

/// Everything `run` produced. Contains no timing so reruns serialize identically.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub field: String,
    pub budget: u64,
    pub degree_cap: usize,
    pub status: RunStatus,
    pub exit_code: i32,
    pub constructions: Vec<ConstructionSummary>,
    pub checks: Vec<CheckResult>,
    pub invariants: Vec<InvariantResult>,
    pub quivers: Vec<QuiverFile>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RunStatus {
    Pass,
    Fail,
    Degraded,
}

impl RunStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            RunStatus::Pass => 0,
            RunStatus::Fail => 1,
            RunStatus::Degraded => 3,
        }
    }

    /// Any failure wins; otherwise any degradation.
    pub fn of(checks: &[CheckResult], invariants: &[InvariantResult]) -> Self {
        if checks.iter().any(|c| c.status == Status::Fail) || invariants.iter().any(|i| !i.holds) {
            RunStatus::Fail
        } else if checks.iter().any(|c| c.status == Status::Degraded || c.partial) {
            RunStatus::Degraded
        } else {
            RunStatus::Pass
        }
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn check(&self, target: &str, check: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.target == target && c.check == check)
    }
}
