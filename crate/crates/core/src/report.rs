//! Small result types shared by the verification routines.

use serde::{Deserialize, Serialize};

/// One failed axiom instance, addressed by basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub indices: Vec<usize>,
}

/// Outcome of checking a family of identities on basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: &str, indices: Vec<usize>) {
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            indices,
        });
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }

    /// First few violations as text, for error messages.
    pub fn summary(&self) -> String {
        let shown: Vec<String> = self
            .violations
            .iter()
            .take(4)
            .map(|v| format!("{} at {:?}", v.axiom, v.indices))
            .collect();
        let more = self.violations.len().saturating_sub(shown.len());
        if more > 0 {
            format!("{} (and {more} more)", shown.join("; "))
        } else {
            shown.join("; ")
        }
    }
}

/// Three-valued answer used where exact certification may be out of reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }

    /// Conjunction where `No` dominates `Unknown`.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::No, _) | (_, Verdict::No) => Verdict::No,
            (Verdict::Yes, Verdict::Yes) => Verdict::Yes,
            _ => Verdict::Unknown,
        }
    }
}

/// How a positive answer was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Certainty {
    /// Backed by a complete certificate.
    Exact,
    /// Every probe passed but no complete certificate was produced.
    Lazy,
}
