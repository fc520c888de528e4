//! Right localization relations and the right-intersected structure of two
//! model structures with the same fibrations.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::class::MorphismClass;
use crate::fincat::{FiniteCategory, MorId};
use crate::lifting::{self, cell_closure, left_complement, right_complement};
use crate::modelstruct::{
    kan_recognition, GeneratingData, KanReport, ModelError, ModelStructure, Refutation, Status,
    Verdict,
};
use crate::report::{Check, Outcome};
use crate::witness::Witness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DelocalizeError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{which} structure is not verified")]
    Unverified { which: &'static str },
    /// Symmetric difference of the two fibration classes.
    #[error("fibrations do not agree ({} morphisms differ)", .0.len())]
    FibrationMismatch(Vec<MorId>),
    /// Symmetric difference of `J₁^⧄` and `J₂^⧄`.
    #[error("generating acyclic cofibrations determine different fibrations ({} morphisms differ)", .0.len())]
    GeneratorFibrationMismatch(Vec<MorId>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalizationClause {
    SameFibrations,
    WeqInclusion,
}

impl fmt::Display for LocalizationClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LocalizationClause::SameFibrations => "fibrations do not agree",
            LocalizationClause::WeqInclusion => "weak equivalences are not included",
        })
    }
}

fn require_verified(m: &ModelStructure, which: &'static str) -> Result<(), DelocalizeError> {
    match m.status {
        Status::Verified => Ok(()),
        _ => Err(DelocalizeError::Unverified { which }),
    }
}

fn require_same_fibrations(a: &MorphismClass, b: &MorphismClass) -> Result<(), DelocalizeError> {
    if a == b {
        Ok(())
    } else {
        Err(DelocalizeError::FibrationMismatch(a.symmetric_difference(b).members()))
    }
}

/// Whether `m2` is a right Bousfield localization of `m1`: `F₁ = F₂` and
/// `W₁ ⊆ W₂`. The witness is the first offending morphism.
pub fn is_right_localization(
    cat: &FiniteCategory,
    m1: &ModelStructure,
    m2: &ModelStructure,
) -> Result<Verdict<LocalizationClause>, DelocalizeError> {
    require_verified(m1, "first")?;
    require_verified(m2, "second")?;
    crate::modelstruct::check_universe(cat, &[&m1.fib, &m1.weq, &m2.fib, &m2.weq])?;
    if let Some(f) = m1.fib.symmetric_difference(&m2.fib).iter().next() {
        return Ok(Err(Refutation {
            clause: LocalizationClause::SameFibrations,
            witness: Witness::Morphism(f),
        }));
    }
    if let Some(f) = m1.weq.first_outside(&m2.weq) {
        return Ok(Err(Refutation {
            clause: LocalizationClause::WeqInclusion,
            witness: Witness::Morphism(f),
        }));
    }
    Ok(Ok(()))
}

/// Whether `m1` is a right Bousfield delocalization of `m2`, i.e. `m2` is a
/// right localization of `m1`.
pub fn is_right_delocalization(
    cat: &FiniteCategory,
    m1: &ModelStructure,
    m2: &ModelStructure,
) -> Result<Verdict<LocalizationClause>, DelocalizeError> {
    is_right_localization(cat, m1, m2)
}

/// `F = F₁`, `W = W₁ ∩ W₂`, `C = ⧄(F ∩ W)`, with status from the axiom
/// checker. A refuted result is returned, not raised.
pub fn right_intersect(
    cat: &FiniteCategory,
    m1: &ModelStructure,
    m2: &ModelStructure,
) -> Result<ModelStructure, DelocalizeError> {
    require_verified(m1, "first")?;
    require_verified(m2, "second")?;
    require_same_fibrations(&m1.fib, &m2.fib)?;
    let weq = m1.weq.intersection(&m2.weq);
    let cof = left_complement(cat, &m1.fib.intersection(&weq));
    let n = ModelStructure::checked(cat, cof, m1.fib.clone(), weq)?;
    if n.is_verified() {
        for m in [m1, m2] {
            assert_eq!(
                is_right_delocalization(cat, &n, m)?,
                Ok(()),
                "intersection must delocalize both inputs"
            );
        }
    }
    Ok(n)
}

/// Result of recognizing `(I₁ ∪ I₂, J₁, W₁ ∩ W₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorIntersection {
    pub data: GeneratingData,
    pub recognition: KanReport,
    /// Recognizing with `J₂` in place of `J₁` gives the same outcome.
    pub symmetric_choice: Check,
    /// Classes agree with [`right_intersect`] of the two induced structures.
    /// Absent when either input presentation is not recognized.
    pub class_agreement: Option<Check>,
}

impl GeneratorIntersection {
    pub fn structure(&self) -> Option<&ModelStructure> {
        self.recognition.induced.as_ref().filter(|m| m.is_verified())
    }

    pub fn consistent(&self) -> bool {
        self.symmetric_choice.passed() && self.class_agreement.as_ref().is_none_or(Check::passed)
    }
}

fn class_triple_check(label: &str, a: &ModelStructure, b: &ModelStructure) -> Check {
    let mut ws: Vec<Witness> = Vec::new();
    for (x, y) in [(&a.cof, &b.cof), (&a.fib, &b.fib), (&a.weq, &b.weq)] {
        ws.extend(x.symmetric_difference(y).iter().map(Witness::Morphism));
    }
    Check::new(label, "C, F and W coincide", ws)
}

fn induced_agreement(label: &str, a: &KanReport, b: &KanReport) -> Check {
    match (&a.induced, &b.induced) {
        (Some(x), Some(y)) => class_triple_check(label, x, y),
        (None, None) => Check::new(label, "neither presentation is recognized", Vec::new()),
        _ => Check {
            label: label.into(),
            statement: "exactly one presentation is recognized".into(),
            outcome: Outcome::Fail(Vec::new()),
        },
    }
}

/// Recognizes `(I₁ ∪ I₂, J₁, W₁ ∩ W₂)` and cross-checks it against the
/// symmetric choice `J₂` and against the class-level intersection.
pub fn intersect_generators(
    cat: &FiniteCategory,
    g1: &GeneratingData,
    g2: &GeneratingData,
) -> Result<GeneratorIntersection, DelocalizeError> {
    let j1 = right_complement(cat, &g1.gen_acyclic_cof);
    let j2 = right_complement(cat, &g2.gen_acyclic_cof);
    if j1 != j2 {
        return Err(DelocalizeError::GeneratorFibrationMismatch(j1.symmetric_difference(&j2).members()));
    }
    let data = GeneratingData {
        gen_cof: g1.gen_cof.union(&g2.gen_cof),
        gen_acyclic_cof: g1.gen_acyclic_cof.clone(),
        weq: g1.weq.intersection(&g2.weq),
    };
    let recognition = kan_recognition(cat, &data)?;
    let swapped = kan_recognition(
        cat,
        &GeneratingData {
            gen_acyclic_cof: g2.gen_acyclic_cof.clone(),
            ..data.clone()
        },
    )?;
    let symmetric_choice = induced_agreement("J₂ in place of J₁", &recognition, &swapped);

    let r1 = kan_recognition(cat, g1)?;
    let r2 = kan_recognition(cat, g2)?;
    let class_agreement = match (r1.recognized(), r2.recognized()) {
        (true, true) => {
            let n = right_intersect(cat, r1.induced.as_ref().unwrap(), r2.induced.as_ref().unwrap())?;
            Some(match &recognition.induced {
                Some(m) => class_triple_check("class-level intersection", m, &n),
                None => Check {
                    label: "class-level intersection".into(),
                    statement: "generator route recognized nothing".into(),
                    outcome: Outcome::Fail(Vec::new()),
                },
            })
        }
        _ => None,
    };
    Ok(GeneratorIntersection {
        data,
        recognition,
        symmetric_choice,
        class_agreement,
    })
}

/// Every displayed inclusion and equality of the generator-level argument,
/// each evaluated as an independent set check.
pub fn proof_step_report(
    cat: &FiniteCategory,
    g1: &GeneratingData,
    g2: &GeneratingData,
) -> Result<Vec<Check>, DelocalizeError> {
    let (w1, w2) = (&g1.weq, &g2.weq);
    let w = w1.intersection(w2);
    let i = g1.gen_cof.union(&g2.gen_cof);
    let i1r = right_complement(cat, &g1.gen_cof);
    let i2r = right_complement(cat, &g2.gen_cof);
    let ir = right_complement(cat, &i);
    let (i1c, i2c, ic) = (left_complement(cat, &i1r), left_complement(cat, &i2r), left_complement(cat, &ir));
    let j1r = right_complement(cat, &g1.gen_acyclic_cof);
    let j2r = right_complement(cat, &g2.gen_acyclic_cof);
    let jr = j1r.clone();
    let j1_cell = cell_closure(cat, &g1.gen_acyclic_cof).map_err(ModelError::from)?;
    let j_cell = j1_cell.clone();

    let mut first = Vec::new();
    if let Err(r) = crate::modelstruct::two_out_of_three(cat, &w) {
        first.push(r.witness);
    }
    if let Some((member, retract)) = lifting::retract_violation(cat, &w) {
        first.push(Witness::Retract { member, retract });
    }

    let mut j_eq: Vec<Witness> = jr.symmetric_difference(&j1r).iter().map(Witness::Morphism).collect();
    j_eq.extend(j1r.symmetric_difference(&j2r).iter().map(Witness::Morphism));

    Ok(vec![
        Check::new("i", "W = W₁ ∩ W₂ satisfies 2-out-of-3 and is closed under retracts", first),
        Check::inclusion("iv.1", "J₁-cell ⊆ W₁ ∩ ⧄(I₁^⧄)", &j1_cell, &w1.intersection(&i1c)),
        Check::inclusion("iv.2", "J₁-cell ⊆ W₂ ∩ ⧄(I₂^⧄)", &j1_cell, &w2.intersection(&i2c)),
        Check::inclusion("iv.3", "⧄(I^⧄) ⊇ ⧄(I₁^⧄) ∪ ⧄(I₂^⧄)", &i1c.union(&i2c), &ic),
        Check::inclusion("iv", "J-cell ⊆ W ∩ ⧄(I^⧄)", &j_cell, &w.intersection(&ic)),
        Check::new("v.1", "J^⧄ = J₁^⧄ = J₂^⧄", j_eq),
        Check::equality(
            "v.2",
            "W ∩ J^⧄ = (W₁ ∩ J₁^⧄) ∩ (W₂ ∩ J₂^⧄)",
            &w.intersection(&jr),
            &w1.intersection(&j1r).intersection(&w2.intersection(&j2r)),
        ),
        Check::inclusion("v.3", "I₁^⧄ ⊆ W₁ ∩ J₁^⧄", &i1r, &w1.intersection(&j1r)),
        Check::inclusion("v.4", "I₂^⧄ ⊆ W₂ ∩ J₂^⧄", &i2r, &w2.intersection(&j2r)),
        Check::equality("v.5", "I^⧄ = I₁^⧄ ∩ I₂^⧄", &ir, &i1r.intersection(&i2r)),
        Check::inclusion("v", "I^⧄ ⊆ W ∩ J^⧄", &ir, &w.intersection(&jr)),
        Check::inclusion("vi.1", "W₁ ∩ J^⧄ ⊆ I₁^⧄", &w1.intersection(&jr), &i1r),
        Check::inclusion("vi.2", "W₂ ∩ J^⧄ ⊆ I₂^⧄", &w2.intersection(&jr), &i2r),
        Check::inclusion("vi", "W ∩ J^⧄ ⊆ I^⧄", &w.intersection(&jr), &ir),
    ])
}

/// Serializable view of an intersection run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionSummary {
    pub result: crate::modelstruct::StructureReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub proof_steps: Vec<crate::report::CheckReport>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::modelstruct::{generators_for, trivial_structures};

    fn arrow_structures() -> (FiniteCategory, ModelStructure, ModelStructure, ModelStructure) {
        let one = catalog::chain(1);
        let (all, ids) = (one.all(), one.identities());
        let discrete_w = ModelStructure::checked(&one, all.clone(), all.clone(), ids.clone()).unwrap();
        let full_w = ModelStructure::checked(&one, ids.clone(), all.clone(), all.clone()).unwrap();
        let iso_f = ModelStructure::checked(&one, all.clone(), ids, all).unwrap();
        (one, discrete_w, full_w, iso_f)
    }

    #[test]
    fn localization_examples_on_the_arrow() {
        let (one, m1, m2, m3) = arrow_structures();
        let f = one.find_morphism("0->1").unwrap();
        assert_eq!(is_right_localization(&one, &m1, &m1).unwrap(), Ok(()));
        assert_eq!(is_right_localization(&one, &m1, &m2).unwrap(), Ok(()));
        assert_eq!(
            is_right_localization(&one, &m2, &m1).unwrap(),
            Err(Refutation {
                clause: LocalizationClause::WeqInclusion,
                witness: Witness::Morphism(f)
            })
        );
        assert_eq!(
            is_right_localization(&one, &m3, &m1).unwrap(),
            Err(Refutation {
                clause: LocalizationClause::SameFibrations,
                witness: Witness::Morphism(f)
            })
        );
        assert_eq!(is_right_delocalization(&one, &m1, &m2).unwrap(), Ok(()));
    }

    #[test]
    fn intersection_with_a_localization_returns_the_delocalized_structure() {
        let (one, m1, m2, m3) = arrow_structures();
        let n = right_intersect(&one, &m1, &m2).unwrap();
        assert_eq!(n, m1);
        assert_eq!(right_intersect(&one, &m2, &m1).unwrap(), m1);
        assert_eq!(right_intersect(&one, &m2, &m2).unwrap(), m2);
        let f = one.find_morphism("0->1").unwrap();
        assert_eq!(right_intersect(&one, &m1, &m3), Err(DelocalizeError::FibrationMismatch(vec![f])));
    }

    #[test]
    fn unverified_input_is_rejected() {
        let (one, m1, _, _) = arrow_structures();
        let raw = ModelStructure::new(m1.cof.clone(), m1.fib.clone(), m1.weq.clone());
        assert_eq!(right_intersect(&one, &raw, &m1), Err(DelocalizeError::Unverified { which: "first" }));
    }

    #[test]
    fn generator_route_on_the_arrow() {
        let (one, m1, m2, _) = arrow_structures();
        let (g1, g2) = (generators_for(&one, &m1), generators_for(&one, &m2));
        let run = intersect_generators(&one, &g1, &g2).unwrap();
        assert!(run.recognition.recognized());
        assert!(run.consistent());
        assert!(run.class_agreement.as_ref().unwrap().passed());
        assert!(run.structure().unwrap().same_classes(&m1));
        assert!(proof_step_report(&one, &g1, &g2).unwrap().iter().all(Check::passed));

        let same = intersect_generators(&one, &g1, &g1).unwrap();
        assert_eq!(same.data, g1);
    }

    #[test]
    fn empty_generators_proof_steps() {
        let d = catalog::discrete(2);
        let g = GeneratingData {
            gen_cof: d.none(),
            gen_acyclic_cof: d.none(),
            weq: d.all(),
        };
        let steps = proof_step_report(&d, &g, &g).unwrap();
        let iv = steps.iter().find(|c| c.label == "iv").unwrap();
        assert_eq!(iv.outcome, Outcome::Pass);
    }

    #[test]
    fn broken_pair_fails_the_fibration_step() {
        let two = catalog::chain(2);
        let ms = trivial_structures(&two).unwrap();
        // (C=all, W=isos, F=all) against (C=all, W=all, F=isos).
        let (g1, g2) = (generators_for(&two, &ms[0]), generators_for(&two, &ms[1]));
        let steps = proof_step_report(&two, &g1, &g2).unwrap();
        let step = steps.iter().find(|c| c.label == "v.1").unwrap();
        assert!(!step.passed());
        assert_eq!(step.witnesses().len(), 3);
        assert!(matches!(
            intersect_generators(&two, &g1, &g2),
            Err(DelocalizeError::GeneratorFibrationMismatch(_))
        ));
    }
}
