use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::format::ElementDoc;

/// Which strong-Drazin family a predicate refers to: generalized
/// (quasinilpotent defect) or pseudo (defect with a power in the radical).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Gns,
    Pns,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Gns => "gns",
            Mode::Pns => "pns",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Verified,
    Vacuous,
    Violation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "VERIFIED",
            Verdict::Vacuous => "VACUOUS",
            Verdict::Violation => "VIOLATION",
        })
    }
}

/// Everything needed to replay one generated instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub recipe: String,
    pub seed: u64,
    pub instance: u64,
    pub a: ElementDoc,
    pub b: ElementDoc,
}

/// Outcome of evaluating one theorem (or one set of defining axioms) on a
/// concrete instance.
///
/// The verdict is `Violation` only when every hypothesis holds and some
/// recorded conclusion fails. Conclusions of conditional clauses are only
/// recorded when the clause's antecedent holds; a report whose hypotheses
/// fail, or in which no conclusion was reached, is `Vacuous`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub mode: Mode,
    pub n: u32,
    pub hypotheses: BTreeMap<String, bool>,
    pub conclusions: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub observations: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl TheoremReport {
    pub fn new(theorem: impl Into<String>, mode: Mode, n: u32) -> Self {
        TheoremReport {
            theorem: theorem.into(),
            mode,
            n,
            hypotheses: BTreeMap::new(),
            conclusions: BTreeMap::new(),
            observations: BTreeMap::new(),
            notes: Vec::new(),
            verdict: Verdict::Vacuous,
            witness: None,
        }
    }

    pub fn hypothesis(&mut self, name: &str, holds: bool) -> bool {
        self.hypotheses.insert(name.to_string(), holds);
        holds
    }

    pub fn conclusion(&mut self, name: &str, holds: bool) -> bool {
        self.conclusions.insert(name.to_string(), holds);
        holds
    }

    pub fn observe(&mut self, name: &str, value: bool) -> bool {
        self.observations.insert(name.to_string(), value);
        value
    }

    /// Records `antecedent ⇒ consequent`. The antecedent is kept as an
    /// observation; the consequent becomes a conclusion only if the
    /// antecedent holds. `consequent` is evaluated lazily.
    pub fn implication(&mut self, name: &str, antecedent: bool, consequent: impl FnOnce() -> bool) {
        self.observe(&format!("{name}.antecedent"), antecedent);
        if antecedent {
            let c = consequent();
            self.conclusion(name, c);
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.values().all(|&h| h)
    }

    pub fn conclusions_hold(&self) -> bool {
        self.conclusions.values().all(|&c| c)
    }

    pub fn finish(mut self) -> Self {
        self.verdict = if !self.hypotheses_hold() || self.conclusions.is_empty() {
            Verdict::Vacuous
        } else if self.conclusions_hold() {
            Verdict::Verified
        } else {
            Verdict::Violation
        };
        self
    }

    pub fn failed_conclusions(&self) -> Vec<&str> {
        self.conclusions
            .iter()
            .filter(|(_, &v)| !v)
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}
