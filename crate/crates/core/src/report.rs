//! Named pass/fail checks shared by the recognition, proof-replay and
//! diagram reports.

use serde::Serialize;

use crate::class::MorphismClass;
use crate::fincat::FiniteCategory;
use crate::witness::{NamedWitness, Witness};

/// Reported outcome text for conditions that hold by finiteness.
pub const TRIVIAL_FINITE: &str = "trivially satisfied (finite category)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Trivial(&'static str),
    Fail(Vec<Witness>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub statement: String,
    pub outcome: Outcome,
}

impl Check {
    pub fn new(label: impl Into<String>, statement: impl Into<String>, witnesses: Vec<Witness>) -> Check {
        Check {
            label: label.into(),
            statement: statement.into(),
            outcome: if witnesses.is_empty() {
                Outcome::Pass
            } else {
                Outcome::Fail(witnesses)
            },
        }
    }

    pub fn trivial(label: impl Into<String>, statement: impl Into<String>) -> Check {
        Check {
            label: label.into(),
            statement: statement.into(),
            outcome: Outcome::Trivial(TRIVIAL_FINITE),
        }
    }

    /// `sub ⊆ sup`; witnesses are the members of `sub \ sup`.
    pub fn inclusion(
        label: impl Into<String>,
        statement: impl Into<String>,
        sub: &MorphismClass,
        sup: &MorphismClass,
    ) -> Check {
        Check::new(label, statement, difference_witnesses(sub, sup))
    }

    /// `a = b`; witnesses are the symmetric difference.
    pub fn equality(
        label: impl Into<String>,
        statement: impl Into<String>,
        a: &MorphismClass,
        b: &MorphismClass,
    ) -> Check {
        Check::new(
            label,
            statement,
            a.symmetric_difference(b).iter().map(Witness::Morphism).collect(),
        )
    }

    pub fn passed(&self) -> bool {
        !matches!(self.outcome, Outcome::Fail(_))
    }

    pub fn witnesses(&self) -> &[Witness] {
        match &self.outcome {
            Outcome::Fail(w) => w,
            _ => &[],
        }
    }

    pub fn named(&self, cat: &FiniteCategory) -> CheckReport {
        let (status, note) = match &self.outcome {
            Outcome::Pass => ("pass", None),
            Outcome::Trivial(note) => ("pass", Some(*note)),
            Outcome::Fail(_) => ("fail", None),
        };
        CheckReport {
            label: self.label.clone(),
            statement: self.statement.clone(),
            status,
            note,
            witnesses: self.witnesses().iter().map(|w| w.named(cat)).collect(),
        }
    }
}

pub fn difference_witnesses(sub: &MorphismClass, sup: &MorphismClass) -> Vec<Witness> {
    sub.difference(sup).iter().map(Witness::Morphism).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub label: String,
    pub statement: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<NamedWitness>,
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

pub fn named_checks(checks: &[Check], cat: &FiniteCategory) -> Vec<CheckReport> {
    checks.iter().map(|c| c.named(cat)).collect()
}
