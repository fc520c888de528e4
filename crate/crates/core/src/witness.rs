//! Counterexamples attached to refuted checks.

use serde::Serialize;

use crate::fincat::{FiniteCategory, MorId};
use crate::lifting::Square;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    /// A single offending morphism (missing factorization, class difference).
    Morphism(MorId),
    /// A lifting square from `left` to `right` with no diagonal.
    Square {
        left: MorId,
        right: MorId,
        square: Square,
    },
    /// `retract` is a retract of `member` but lies outside the class.
    Retract { member: MorId, retract: MorId },
    /// `composite = second ∘ first` violating 2-out-of-3.
    Triple {
        first: MorId,
        second: MorId,
        composite: MorId,
    },
}

/// A witness with morphism ids spelled out, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum NamedWitness {
    Morphism {
        morphism: String,
    },
    Square {
        left: String,
        right: String,
        top: String,
        bottom: String,
    },
    Retract {
        member: String,
        retract: String,
    },
    Triple {
        first: String,
        second: String,
        composite: String,
    },
}

impl Witness {
    pub fn named(&self, cat: &FiniteCategory) -> NamedWitness {
        let n = |m: MorId| cat.morphism_name(m).to_string();
        match *self {
            Witness::Morphism(m) => NamedWitness::Morphism { morphism: n(m) },
            Witness::Square {
                left,
                right,
                square,
            } => NamedWitness::Square {
                left: n(left),
                right: n(right),
                top: n(square.top),
                bottom: n(square.bottom),
            },
            Witness::Retract { member, retract } => NamedWitness::Retract {
                member: n(member),
                retract: n(retract),
            },
            Witness::Triple {
                first,
                second,
                composite,
            } => NamedWitness::Triple {
                first: n(first),
                second: n(second),
                composite: n(composite),
            },
        }
    }

    pub fn describe(&self, cat: &FiniteCategory) -> String {
        match self.named(cat) {
            NamedWitness::Morphism { morphism } => morphism,
            NamedWitness::Square {
                left,
                right,
                top,
                bottom,
            } => format!("square {left} ⧄ {right} (top {top}, bottom {bottom}) has no diagonal"),
            NamedWitness::Retract { member, retract } => {
                format!("{retract} is a retract of {member}")
            }
            NamedWitness::Triple {
                first,
                second,
                composite,
            } => format!("{second} ∘ {first} = {composite}"),
        }
    }
}
