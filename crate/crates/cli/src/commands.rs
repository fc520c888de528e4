//! One function per subcommand. Each returns a report and whether the
//! checked statement holds; input and precondition problems are errors.

use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use modelcat::delocalize::{
    intersect_generators, proof_step_report, right_intersect, DelocalizeError, IntersectionSummary,
};
use modelcat::diagram::{
    adjoint_lemma_all, check_diag_intersection, check_diagdown_hypotheses, induced_base_structure,
    objectwise_structure, DiagramError,
};
use modelcat::explorer::{
    build_quiver, certify_all, component_analysis, enumerate_model_structures, naive_scan,
};
use modelcat::fincat::{functor_category, DEFAULT_OBJECT_CAP};
use modelcat::modelstruct::{
    generators_for, is_wfs, kan_recognition, two_out_of_three, GeneratingData, ModelStructure,
    Refutation, Status,
};
use modelcat::report::{all_passed, named_checks};
use modelcat::{FiniteCategory, MorId};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{load_category, Shape, StructureInput};

pub enum Body {
    Json(Value),
    Text(String),
}

pub struct Report {
    pub body: Body,
    pub holds: bool,
}

fn report(command: &str, holds: bool, status: &str, body: impl Serialize) -> Result<Report> {
    let mut value = json!({"command": command, "status": status});
    match serde_json::to_value(body)? {
        Value::Object(fields) => value.as_object_mut().unwrap().extend(fields),
        Value::Null => {}
        other => bail!("report body must be an object, got {other}"),
    }
    Ok(Report {
        body: Body::Json(value),
        holds,
    })
}

fn verdict_status(holds: bool) -> &'static str {
    if holds {
        "verified"
    } else {
        "refuted"
    }
}

fn names(cat: &FiniteCategory, ms: &[MorId]) -> String {
    ms.iter().map(|&m| cat.morphism_name(m)).collect::<Vec<_>>().join(", ")
}

fn explain(cat: &FiniteCategory, e: DelocalizeError) -> anyhow::Error {
    match e {
        DelocalizeError::FibrationMismatch(ms) => {
            anyhow::anyhow!("fibrations do not agree (they differ on {})", names(cat, &ms))
        }
        DelocalizeError::GeneratorFibrationMismatch(ms) => anyhow::anyhow!(
            "fibrations do not agree: J₁^⧄ and J₂^⧄ differ on {}",
            names(cat, &ms)
        ),
        other => other.into(),
    }
}

fn explain_diagram(cat: &FiniteCategory, e: DiagramError) -> anyhow::Error {
    match e {
        DiagramError::Delocalize(d) => explain(cat, d),
        other => other.into(),
    }
}

/// Runs the axiom checker; a refuted input is a precondition failure.
fn require_model(input: &StructureInput, which: &str) -> Result<ModelStructure> {
    let cat = &input.category;
    let m = input.structure()?.verify(cat)?;
    if let Status::Refuted(r) = m.status {
        bail!(
            "{}: {which} structure is not a model structure: {} fails: {}",
            input.path.display(),
            r.clause,
            r.witness.describe(cat)
        );
    }
    Ok(m)
}

fn refutation_fields<C: ToString>(cat: &FiniteCategory, r: &Refutation<C>) -> Value {
    json!({"failed_clause": r.clause.to_string(), "witness": r.witness.named(cat)})
}

pub fn validate(path: &Path) -> Result<Report> {
    let cat = load_category(path)?;
    let raw = cat.to_raw();
    report(
        "validate",
        true,
        "valid",
        json!({"summary": cat.summary(), "objects": raw.objects, "morphisms": raw.morphisms}),
    )
}

pub fn check_wfs(path: &Path) -> Result<Report> {
    let input = StructureInput::load(path)?;
    let cat = &input.category;
    let (left, right) = input.wfs()?;
    let verdict = is_wfs(cat, &left, &right)?;
    let mut body = json!({"left": cat.class_names(&left), "right": cat.class_names(&right)});
    if let Err(r) = &verdict {
        body.as_object_mut().unwrap().extend(refutation_fields(cat, r).as_object().unwrap().clone());
    }
    report("check-wfs", verdict.is_ok(), verdict_status(verdict.is_ok()), body)
}

pub fn check_model(path: &Path) -> Result<Report> {
    let input = StructureInput::load(path)?;
    let cat = &input.category;
    let m = input.structure()?;
    let (acof, afib) = (m.acyclic_cofibrations(), m.acyclic_fibrations());
    let axiom = |name: &str, failure: Option<Value>| match failure {
        None => json!({"axiom": name, "status": "verified"}),
        Some(fields) => {
            let mut v = json!({"axiom": name, "status": "refuted"});
            v.as_object_mut().unwrap().extend(fields.as_object().unwrap().clone());
            v
        }
    };
    let axioms = vec![
        axiom(
            "W satisfies 2-out-of-3",
            two_out_of_three(cat, &m.weq).err().map(|r| json!({"witness": r.witness.named(cat)})),
        ),
        axiom(
            "(C ∩ W, F) is a WFS",
            is_wfs(cat, &acof, &m.fib)?.err().map(|r| refutation_fields(cat, &r)),
        ),
        axiom(
            "(C, F ∩ W) is a WFS",
            is_wfs(cat, &m.cof, &afib)?.err().map(|r| refutation_fields(cat, &r)),
        ),
    ];
    let m = m.verify(cat)?;
    let holds = m.is_verified();
    report(
        "check-model",
        holds,
        verdict_status(holds),
        json!({"structure": m.report(cat), "axioms": axioms}),
    )
}

fn generators_view(cat: &FiniteCategory, g: &GeneratingData) -> Value {
    json!({
        "I": cat.class_names(&g.gen_cof),
        "J": cat.class_names(&g.gen_acyclic_cof),
        "weq": cat.class_names(&g.weq),
    })
}

pub fn recognize(path: &Path) -> Result<Report> {
    let input = StructureInput::load(path)?;
    let cat = &input.category;
    let g = input.generators()?;
    let kan = kan_recognition(cat, &g)?;
    let holds = kan.recognized();
    let status = if holds { "recognized" } else { "refuted" };
    report(
        "recognize",
        holds,
        status,
        json!({"generators": generators_view(cat, &g), "recognition": kan.summary(cat)}),
    )
}

pub fn intersect(first: &Path, second: &Path) -> Result<Report> {
    let a = StructureInput::load(first)?;
    let b = StructureInput::load(second)?;
    if a.category.to_raw() != b.category.to_raw() {
        bail!("{} and {} describe different categories", first.display(), second.display());
    }
    let cat = &a.category;
    match (a.shape()?, b.shape()?) {
        (Shape::Model, Shape::Model) => {
            let m1 = require_model(&a, "first")?;
            let m2 = require_model(&b, "second")?;
            let n = right_intersect(cat, &m1, &m2).map_err(|e| explain(cat, e))?;
            let steps = proof_step_report(cat, &generators_for(cat, &m1), &generators_for(cat, &m2))
                .map_err(|e| explain(cat, e))?;
            let holds = n.is_verified() && all_passed(&steps);
            let summary = IntersectionSummary {
                result: n.report(cat),
                proof_steps: named_checks(&steps, cat),
            };
            report("intersect", holds, verdict_status(holds), json!({"route": "classes", "summary": summary}))
        }
        (Shape::Generators, Shape::Generators) => {
            let (g1, g2) = (a.generators()?, b.generators()?);
            let gi = intersect_generators(cat, &g1, &g2).map_err(|e| explain(cat, e))?;
            let steps = proof_step_report(cat, &g1, &g2).map_err(|e| explain(cat, e))?;
            let holds = gi.structure().is_some() && gi.consistent() && all_passed(&steps);
            let mut body = json!({
                "route": "generators",
                "generators": generators_view(cat, &gi.data),
                "recognition": gi.recognition.summary(cat),
                "symmetric_choice": gi.symmetric_choice.named(cat),
            });
            let fields = body.as_object_mut().unwrap();
            if let Some(c) = &gi.class_agreement {
                fields.insert("class_agreement".into(), serde_json::to_value(c.named(cat))?);
            }
            fields.insert("proof_steps".into(), serde_json::to_value(named_checks(&steps, cat))?);
            report("intersect", holds, verdict_status(holds), body)
        }
        _ => bail!("both structure files must use cof/fib/weq, or both I/J/weq"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DiagramCheck {
    /// The five hypotheses of the induced-structure theorem.
    Hypotheses,
    /// Recover the base structure and rebuild the objectwise one.
    RoundTrip,
    /// Lifting through the right adjoint of evaluation.
    Adjoint,
    /// Objectwise structures commute with right intersection (needs --with).
    Commutation,
}

pub fn diagram(
    structure: &Path,
    shape: &Path,
    with: Option<&Path>,
    checks: &[DiagramCheck],
) -> Result<Report> {
    let input = StructureInput::load(structure)?;
    let m = require_model(&input, "base")?;
    let shape = load_category(shape)?;
    let base = Arc::new(input.category.clone());
    let idx = functor_category(base.clone(), Arc::new(shape), DEFAULT_OBJECT_CAP)
        .context("cannot build the diagram category")?;
    let total = idx.total();
    let wanted = |c| checks.is_empty() || checks.contains(&c);
    if checks.contains(&DiagramCheck::Commutation) && with.is_none() {
        bail!("--check commutation needs a second base structure via --with");
    }

    let mc = objectwise_structure(&idx, &m).map_err(|e| explain_diagram(&base, e))?;
    let mut holds = mc.is_verified();
    let mut body = serde_json::Map::new();
    body.insert(
        "diagram_category".into(),
        serde_json::to_value(total.summary())?,
    );
    body.insert("objectwise".into(), serde_json::to_value(mc.report(total))?);

    if wanted(DiagramCheck::Hypotheses) {
        let h = check_diagdown_hypotheses(&idx, &mc).map_err(|e| explain_diagram(&base, e))?;
        holds &= h.passed();
        body.insert("hypotheses".into(), serde_json::to_value(h.summary(total))?);
    }
    if wanted(DiagramCheck::RoundTrip) {
        let value = match induced_base_structure(&idx, &mc) {
            Ok(induced) => {
                let same = induced.structure.same_classes(&m);
                holds &= same;
                json!({"recovered": induced.structure.report(&base), "equals_input": same})
            }
            Err(e @ (DiagramError::HypothesisFailed { .. } | DiagramError::RoundTrip(_))) => {
                holds = false;
                json!({"failure": e.to_string()})
            }
            Err(e) => return Err(explain_diagram(&base, e)),
        };
        body.insert("round_trip".into(), value);
    }
    if wanted(DiagramCheck::Adjoint) {
        let lemma = adjoint_lemma_all(&idx, &mc).map_err(|e| explain_diagram(&base, e))?;
        holds &= all_passed(&lemma);
        body.insert("adjoint_lemma".into(), serde_json::to_value(named_checks(&lemma, &base))?);
    }
    if let Some(path) = with.filter(|_| wanted(DiagramCheck::Commutation)) {
        let other = StructureInput::load(path)?;
        if other.category.to_raw() != base.to_raw() {
            bail!("{} uses a different base category", path.display());
        }
        let m2 = require_model(&other, "second base")?;
        let c = check_diag_intersection(&idx, &m, &m2).map_err(|e| explain_diagram(&base, e))?;
        holds &= c.passed();
        body.insert("commutation".into(), serde_json::to_value(c.named(total))?);
    }
    report("diagram", holds, verdict_status(holds), body)
}

fn structures(cat: &FiniteCategory, naive: bool, budget: usize) -> Result<Vec<ModelStructure>> {
    Ok(if naive {
        naive_scan(cat)?
    } else {
        enumerate_model_structures(cat, budget)?
    })
}

pub fn enumerate(path: &Path, naive: bool, budget: usize) -> Result<Report> {
    let cat = load_category(path)?;
    let found = structures(&cat, naive, budget)?;
    let reports: Vec<_> = found.iter().map(|m| m.report(&cat)).collect();
    report(
        "enumerate",
        true,
        "complete",
        json!({
            "method": if naive { "naive" } else { "wfs-pairs" },
            "count": found.len(),
            "structures": reports,
        }),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum QuiverFormat {
    Json,
    Dot,
}

pub fn quiver(path: &Path, format: QuiverFormat, certify: bool, naive: bool, budget: usize) -> Result<Report> {
    let cat = load_category(path)?;
    let found = structures(&cat, naive, budget)?;
    let q = build_quiver(&cat, &found)?;
    if format == QuiverFormat::Dot {
        return Ok(Report {
            body: Body::Text(q.to_dot(&cat)),
            holds: true,
        });
    }
    let mut body = json!({
        "quiver": q.export(&cat),
        "components": component_analysis(&q),
    });
    let mut holds = true;
    if certify {
        let certs = certify_all(&cat, &q)?;
        holds = certs.iter().all(|c| c.certified());
        body.as_object_mut()
            .unwrap()
            .insert("certificates".into(), serde_json::to_value(certs)?);
    }
    let status = match (certify, holds) {
        (false, _) => "complete",
        (true, true) => "certified",
        (true, false) => "refuted",
    };
    report("quiver", holds, status, body)
}
