//! Recognition of cofibrantly generated model structures from `(I, J, W)`.

use serde::Serialize;

use super::{check_universe, model_verdict, two_out_of_three, GeneratingData, ModelError, ModelStructure, Status};
use crate::fincat::FiniteCategory;
use crate::lifting::{self, cell_closure, left_complement, right_complement};
use crate::report::{all_passed, named_checks, Check, CheckReport};
use crate::witness::Witness;

/// Outcome of the six recognition conditions plus the induced structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KanReport {
    /// Conditions (i) to (vi) in order.
    pub conditions: Vec<Check>,
    /// Cross-checks on the induced triple; empty unless every condition passed.
    pub consistency: Vec<Check>,
    /// `C = ⧄(I^⧄)`, `F = J^⧄`, `W`, with the status from the axiom checker.
    pub induced: Option<ModelStructure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KanSummary {
    pub recognized: bool,
    pub conditions: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub consistency: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induced: Option<super::StructureReport>,
}

impl KanReport {
    pub fn conditions_hold(&self) -> bool {
        all_passed(&self.conditions)
    }

    /// Every condition holds and the induced triple passed its cross-checks.
    pub fn recognized(&self) -> bool {
        self.conditions_hold()
            && all_passed(&self.consistency)
            && self.induced.as_ref().is_some_and(ModelStructure::is_verified)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.conditions.iter().chain(&self.consistency).filter(|c| !c.passed())
    }

    pub fn summary(&self, cat: &FiniteCategory) -> KanSummary {
        KanSummary {
            recognized: self.recognized(),
            conditions: named_checks(&self.conditions, cat),
            consistency: named_checks(&self.consistency, cat),
            induced: self.induced.as_ref().map(|m| m.report(cat)),
        }
    }
}

/// Evaluates all six conditions, reporting every failure. Requires the
/// pushouts that `J`-cell needs.
pub fn kan_recognition(cat: &FiniteCategory, g: &GeneratingData) -> Result<KanReport, ModelError> {
    check_universe(cat, &[&g.gen_cof, &g.gen_acyclic_cof, &g.weq])?;
    let w = &g.weq;
    let i_right = right_complement(cat, &g.gen_cof);
    let i_cof = left_complement(cat, &i_right);
    let j_right = right_complement(cat, &g.gen_acyclic_cof);
    let j_cof = left_complement(cat, &j_right);
    let j_cell = cell_closure(cat, &g.gen_acyclic_cof)?;

    let mut first = Vec::new();
    if let Err(r) = two_out_of_three(cat, w) {
        first.push(r.witness);
    }
    if let Some((member, retract)) = lifting::retract_violation(cat, w) {
        first.push(Witness::Retract { member, retract });
    }

    let w_i_cof = w.intersection(&i_cof);
    let w_j_right = w.intersection(&j_right);
    let sixth = if w_i_cof.is_subset(&j_cof) || w_j_right.is_subset(&i_right) {
        Vec::new()
    } else {
        let mut ws = crate::report::difference_witnesses(&w_i_cof, &j_cof);
        ws.extend(crate::report::difference_witnesses(&w_j_right, &i_right));
        ws
    };

    let conditions = vec![
        Check::new("i", "W satisfies 2-out-of-3 and is closed under retracts", first),
        Check::trivial("ii", "domains of I are small relative to I-cell"),
        Check::trivial("iii", "domains of J are small relative to J-cell"),
        Check::inclusion("iv", "J-cell ⊆ W ∩ ⧄(I^⧄)", &j_cell, &w_i_cof),
        Check::inclusion("v", "I^⧄ ⊆ W ∩ J^⧄", &i_right, &w_j_right),
        Check::new("vi", "W ∩ ⧄(I^⧄) ⊆ ⧄(J^⧄) or W ∩ J^⧄ ⊆ I^⧄", sixth),
    ];

    let mut report = KanReport {
        conditions,
        consistency: Vec::new(),
        induced: None,
    };
    if report.conditions_hold() {
        let mut induced = ModelStructure::new(i_cof, j_right, w.clone());
        induced.status = match model_verdict(cat, &induced.cof, &induced.fib, &induced.weq) {
            Ok(()) => Status::Verified,
            Err(r) => Status::Refuted(r),
        };
        let axiom_witness = match induced.status {
            Status::Refuted(r) => vec![r.witness],
            _ => Vec::new(),
        };
        report.consistency = vec![
            Check::new("axioms", "induced (C, F, W) passes the model-structure axioms", axiom_witness),
            Check::equality("acyclic fibrations", "F ∩ W = I^⧄", &induced.acyclic_fibrations(), &i_right),
            Check::equality(
                "fibrations",
                "J^⧄ = (C ∩ W)^⧄",
                &induced.fib,
                &right_complement(cat, &induced.acyclic_cofibrations()),
            ),
        ];
        report.induced = Some(induced);
    }
    Ok(report)
}
