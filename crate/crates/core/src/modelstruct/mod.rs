//! Weak factorization systems and model-structure axioms.

mod kan;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::class::MorphismClass;
use crate::fincat::{FiniteCategory, MorId, ObjId};
use crate::lifting::{self, LiftingError};
use crate::witness::{NamedWitness, Witness};

pub use kan::{kan_recognition, KanReport, KanSummary};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("class over {found} morphisms used with a category of {expected} morphisms")]
    CategoryMismatch { expected: usize, found: usize },
    #[error("standard structure ({name}) failed verification: {reason}")]
    TrivialStructureRefuted { name: &'static str, reason: String },
    #[error(transparent)]
    Lifting(#[from] LiftingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WfsClause {
    Factorization,
    Lifting,
    LeftRetracts,
    RightRetracts,
}

/// Which model-category axiom failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    TwoOutOfThree,
    /// The system `(C ∩ W, F)`.
    AcyclicCofibrationFibration(WfsClause),
    /// The system `(C, F ∩ W)`.
    CofibrationAcyclicFibration(WfsClause),
}

impl fmt::Display for WfsClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WfsClause::Factorization => "factorization",
            WfsClause::Lifting => "lifting",
            WfsClause::LeftRetracts => "left class closed under retracts",
            WfsClause::RightRetracts => "right class closed under retracts",
        })
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::TwoOutOfThree => f.write_str("W satisfies 2-out-of-3"),
            Axiom::AcyclicCofibrationFibration(c) => write!(f, "(C ∩ W, F) is a WFS: {c}"),
            Axiom::CofibrationAcyclicFibration(c) => write!(f, "(C, F ∩ W) is a WFS: {c}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Refutation<C> {
    pub clause: C,
    pub witness: Witness,
}

/// `Ok(())` when verified, otherwise the first failing clause with a witness.
pub type Verdict<C> = Result<(), Refutation<C>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Unverified,
    Verified,
    Refuted(Refutation<Axiom>),
}

/// Cofibrations, fibrations and weak equivalences on one category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelStructure {
    pub cof: MorphismClass,
    pub fib: MorphismClass,
    pub weq: MorphismClass,
    pub status: Status,
}

/// Generating cofibrations `I`, generating acyclic cofibrations `J`, and `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingData {
    pub gen_cof: MorphismClass,
    pub gen_acyclic_cof: MorphismClass,
    pub weq: MorphismClass,
}

pub(crate) fn check_universe(cat: &FiniteCategory, classes: &[&MorphismClass]) -> Result<(), ModelError> {
    for c in classes {
        if c.universe() != cat.num_morphisms() {
            return Err(ModelError::CategoryMismatch {
                expected: cat.num_morphisms(),
                found: c.universe(),
            });
        }
    }
    Ok(())
}

/// Least `(z, l, r)` with `l ∈ left`, `r ∈ right` and `r ∘ l = f`.
pub fn factorization(
    cat: &FiniteCategory,
    f: MorId,
    left: &MorphismClass,
    right: &MorphismClass,
) -> Option<(ObjId, MorId, MorId)> {
    let (x, y) = (cat.dom(f), cat.cod(f));
    for z in cat.objects() {
        for &l in cat.hom(x, z) {
            if !left.contains(l) {
                continue;
            }
            for &r in cat.hom(z, y) {
                if right.contains(r) && cat.comp(r, l) == f {
                    return Some((z, l, r));
                }
            }
        }
    }
    None
}

/// Checks that `(left, right)` is a weak factorization system.
pub fn is_wfs(
    cat: &FiniteCategory,
    left: &MorphismClass,
    right: &MorphismClass,
) -> Result<Verdict<WfsClause>, ModelError> {
    check_universe(cat, &[left, right])?;
    Ok(wfs_verdict(cat, left, right))
}

fn wfs_verdict(cat: &FiniteCategory, left: &MorphismClass, right: &MorphismClass) -> Verdict<WfsClause> {
    let refute = |clause, witness| Err(Refutation { clause, witness });
    if let Some(f) = cat.morphisms().find(|&f| factorization(cat, f, left, right).is_none()) {
        return refute(WfsClause::Factorization, Witness::Morphism(f));
    }
    if let Some((l, r, square)) = lifting::lifting_violation(cat, left, right) {
        return refute(WfsClause::Lifting, Witness::Square { left: l, right: r, square });
    }
    if let Some((member, retract)) = lifting::retract_violation(cat, left) {
        return refute(WfsClause::LeftRetracts, Witness::Retract { member, retract });
    }
    if let Some((member, retract)) = lifting::retract_violation(cat, right) {
        return refute(WfsClause::RightRetracts, Witness::Retract { member, retract });
    }
    Ok(())
}

/// 2-out-of-3 for `W`; the witness is the first composable pair in index
/// order where exactly two of `f`, `g`, `g ∘ f` lie in `W`.
pub fn two_out_of_three(cat: &FiniteCategory, weq: &MorphismClass) -> Verdict<Axiom> {
    for f in cat.morphisms() {
        for &g in cat.outgoing(cat.cod(f)) {
            let gf = cat.comp(g, f);
            let inside = [weq.contains(f), weq.contains(g), weq.contains(gf)]
                .iter()
                .filter(|&&b| b)
                .count();
            if inside == 2 {
                return Err(Refutation {
                    clause: Axiom::TwoOutOfThree,
                    witness: Witness::Triple {
                        first: f,
                        second: g,
                        composite: gf,
                    },
                });
            }
        }
    }
    Ok(())
}

/// Full axiom check: 2-out-of-3, then `(C ∩ W, F)`, then `(C, F ∩ W)`.
pub fn is_model_structure(cat: &FiniteCategory, m: &ModelStructure) -> Result<Verdict<Axiom>, ModelError> {
    check_universe(cat, &[&m.cof, &m.fib, &m.weq])?;
    Ok(model_verdict(cat, &m.cof, &m.fib, &m.weq))
}

fn model_verdict(
    cat: &FiniteCategory,
    cof: &MorphismClass,
    fib: &MorphismClass,
    weq: &MorphismClass,
) -> Verdict<Axiom> {
    two_out_of_three(cat, weq)?;
    wfs_verdict(cat, &cof.intersection(weq), fib).map_err(|r| Refutation {
        clause: Axiom::AcyclicCofibrationFibration(r.clause),
        witness: r.witness,
    })?;
    wfs_verdict(cat, cof, &fib.intersection(weq)).map_err(|r| Refutation {
        clause: Axiom::CofibrationAcyclicFibration(r.clause),
        witness: r.witness,
    })
}

impl ModelStructure {
    /// An unverified triple.
    pub fn new(cof: MorphismClass, fib: MorphismClass, weq: MorphismClass) -> Self {
        ModelStructure {
            cof,
            fib,
            weq,
            status: Status::Unverified,
        }
    }

    /// Runs the axiom checker and records the outcome in `status`.
    pub fn checked(
        cat: &FiniteCategory,
        cof: MorphismClass,
        fib: MorphismClass,
        weq: MorphismClass,
    ) -> Result<Self, ModelError> {
        ModelStructure::new(cof, fib, weq).verify(cat)
    }

    pub fn verify(mut self, cat: &FiniteCategory) -> Result<Self, ModelError> {
        self.status = match is_model_structure(cat, &self)? {
            Ok(()) => Status::Verified,
            Err(r) => Status::Refuted(r),
        };
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn acyclic_cofibrations(&self) -> MorphismClass {
        self.cof.intersection(&self.weq)
    }

    pub fn acyclic_fibrations(&self) -> MorphismClass {
        self.fib.intersection(&self.weq)
    }

    /// Equality of the three classes, ignoring status.
    pub fn same_classes(&self, other: &ModelStructure) -> bool {
        self.cof == other.cof && self.fib == other.fib && self.weq == other.weq
    }

    pub fn class_order(&self, other: &ModelStructure) -> Ordering {
        (&self.cof, &self.fib, &self.weq).cmp(&(&other.cof, &other.fib, &other.weq))
    }

    pub fn report(&self, cat: &FiniteCategory) -> StructureReport {
        let (status, failed_axiom, witness) = match &self.status {
            Status::Unverified => ("unverified", None, None),
            Status::Verified => ("verified", None, None),
            Status::Refuted(r) => ("refuted", Some(r.clause.to_string()), Some(r.witness.named(cat))),
        };
        StructureReport {
            cof: cat.class_names(&self.cof),
            fib: cat.class_names(&self.fib),
            weq: cat.class_names(&self.weq),
            status,
            failed_axiom,
            witness,
        }
    }
}

/// Serializable view of a model structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub cof: Vec<String>,
    pub fib: Vec<String>,
    pub weq: Vec<String>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_axiom: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<NamedWitness>,
}

/// The standard structures every category carries, each verified:
/// `(C=all, W=isos, F=all)`, `(C=all, W=all, F=isos)`, `(C=isos, W=all, F=all)`,
/// deduplicated by class equality.
pub fn trivial_structures(cat: &FiniteCategory) -> Result<Vec<ModelStructure>, ModelError> {
    let (all, isos) = (cat.all(), cat.isomorphisms());
    let candidates = [
        ("C=all, W=isos, F=all", all.clone(), all.clone(), isos.clone()),
        ("C=all, W=all, F=isos", all.clone(), isos.clone(), all.clone()),
        ("C=isos, W=all, F=all", isos, all.clone(), all),
    ];
    let mut out: Vec<ModelStructure> = Vec::new();
    for (name, cof, fib, weq) in candidates {
        let m = ModelStructure::checked(cat, cof, fib, weq)?;
        if let Status::Refuted(r) = m.status {
            return Err(ModelError::TrivialStructureRefuted {
                name,
                reason: format!("{}: {}", r.clause, r.witness.describe(cat)),
            });
        }
        if !out.iter().any(|o| o.same_classes(&m)) {
            out.push(m);
        }
    }
    Ok(out)
}

/// An irredundant generating presentation of a verified structure:
/// `I ⊆ C` with `I^⧄ = F ∩ W` and `J ⊆ C ∩ W` with `J^⧄ = F`, each pruned
/// greedily in index order.
pub fn generators_for(cat: &FiniteCategory, m: &ModelStructure) -> GeneratingData {
    let prune = |candidates: MorphismClass, target: &MorphismClass| {
        let mut gens = candidates;
        for x in gens.members() {
            if cat.is_identity(x) {
                gens.remove(x);
                continue;
            }
            let mut smaller = gens.clone();
            smaller.remove(x);
            if &lifting::right_complement(cat, &smaller) == target {
                gens = smaller;
            }
        }
        gens
    };
    GeneratingData {
        gen_cof: prune(m.cof.clone(), &m.acyclic_fibrations()),
        gen_acyclic_cof: prune(m.acyclic_cofibrations(), &m.fib),
        weq: m.weq.clone(),
    }
}
