//! Objectwise model structures on diagram categories `M^C` and the base
//! structure induced back from component maps.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::class::MorphismClass;
use crate::delocalize::{right_intersect, DelocalizeError};
use crate::fincat::{DiagramIndex, FiniteCategory, IndexError, MorId, ObjId};
use crate::lifting::{self, left_complement, right_complement};
use crate::modelstruct::{check_universe, ModelError, ModelStructure};
use crate::report::{all_passed, named_checks, Check, CheckReport};
use crate::witness::Witness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Delocalize(#[from] DelocalizeError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error("{which} structure is not verified")]
    Unverified { which: &'static str },
    #[error("hypothesis ({label}) fails")]
    HypothesisFailed { label: String },
    /// Morphisms of `M^C` where the rebuilt structure differs.
    #[error("rebuilt objectwise structure differs from the original on {} morphisms", .0.len())]
    RoundTrip(Vec<MorId>),
    #[error("no product of {copies} copies of `{y}` (needed at shape object `{beta}`)")]
    MissingProduct { beta: String, y: String, copies: usize },
    #[error("adjunction check failed: {0}")]
    Adjunction(String),
}

fn require_verified(m: &ModelStructure, which: &'static str) -> Result<(), DiagramError> {
    if m.is_verified() {
        Ok(())
    } else {
        Err(DiagramError::Unverified { which })
    }
}

/// `{φ : every component of φ lies in class}`.
pub fn componentwise(idx: &DiagramIndex, class: &MorphismClass) -> MorphismClass {
    MorphismClass::from_fn(idx.total().num_morphisms(), |phi| {
        idx.transformation(phi).components.iter().all(|&c| class.contains(c))
    })
}

/// Every component of every member of `class ⊆ Mor(M^C)`.
pub fn components_of(idx: &DiagramIndex, class: &MorphismClass) -> MorphismClass {
    let mut out = idx.base().none();
    for phi in class.iter() {
        for &c in &idx.transformation(phi).components {
            out.insert(c);
        }
    }
    out
}

/// Objectwise `W` and `F`, and `C = ⧄(F ∩ W)` computed in `M^C`, with status
/// from the axiom checker on `M^C`.
pub fn objectwise_structure(idx: &DiagramIndex, m: &ModelStructure) -> Result<ModelStructure, DiagramError> {
    require_verified(m, "base")?;
    check_universe(idx.base(), &[&m.cof, &m.fib, &m.weq])?;
    let total = idx.total();
    let weq = componentwise(idx, &m.weq);
    let fib = componentwise(idx, &m.fib);
    let cof = left_complement(total, &fib.intersection(&weq));
    Ok(ModelStructure::checked(total, cof, fib, weq)?)
}

fn class_equality(label: &str, statement: &str, a: &ModelStructure, b: &ModelStructure) -> Check {
    let mut ws: Vec<Witness> = Vec::new();
    for (x, y) in [(&a.cof, &b.cof), (&a.fib, &b.fib), (&a.weq, &b.weq)] {
        ws.extend(x.symmetric_difference(y).iter().map(Witness::Morphism));
    }
    ws.sort();
    ws.dedup();
    Check::new(label, statement, ws)
}

/// Compares `(M₁ ∩ M₂)^C` with `M₁^C ∩ M₂^C` class by class; witnesses are
/// morphisms of `M^C`.
pub fn check_diag_intersection(
    idx: &DiagramIndex,
    m1: &ModelStructure,
    m2: &ModelStructure,
) -> Result<Check, DiagramError> {
    let base_meet = right_intersect(idx.base(), m1, m2)?;
    let lhs = objectwise_structure(idx, &base_meet)?;
    let (o1, o2) = (objectwise_structure(idx, m1)?, objectwise_structure(idx, m2)?);
    require_verified(&o1, "first objectwise")?;
    require_verified(&o2, "second objectwise")?;
    let rhs = right_intersect(idx.total(), &o1, &o2)?;
    Ok(class_equality("commutation", "(M₁ ∩ M₂)^C = M₁^C ∩ M₂^C", &lhs, &rhs))
}

/// The five hypotheses, plus the ambient reading of (iv) for comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagdownReport {
    /// Hypotheses (i) to (v); (iv) computed inside the full pointed subcategory.
    pub hypotheses: Vec<Check>,
    /// (iv) with complements taken in `M^C` and restricted to pointed maps afterwards.
    pub ambient_iv: Check,
    /// Whether both readings of (iv) give the same verdict and witnesses.
    pub readings_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagdownSummary {
    pub passed: bool,
    pub hypotheses: Vec<CheckReport>,
    pub ambient_iv: CheckReport,
    pub readings_agree: bool,
}

impl DiagdownReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.hypotheses)
    }

    pub fn summary(&self, total: &FiniteCategory) -> DiagdownSummary {
        DiagdownSummary {
            passed: self.passed(),
            hypotheses: named_checks(&self.hypotheses, total),
            ambient_iv: self.ambient_iv.named(total),
            readings_agree: self.readings_agree,
        }
    }
}

/// Morphisms between constant diagrams, with the full subcategory they span.
struct Pointed {
    sub: FiniteCategory,
    /// Sub morphism index to `M^C` morphism.
    embedding: Vec<MorId>,
    /// Pointed morphisms as a class on `M^C`.
    maps: MorphismClass,
}

impl Pointed {
    fn new(idx: &DiagramIndex) -> Pointed {
        let (sub, embedding) = idx.total().full_subcategory(&idx.pointed_objects());
        let maps = MorphismClass::from_members(idx.total().num_morphisms(), embedding.iter().copied());
        Pointed { sub, embedding, maps }
    }

    fn restrict(&self, class: &MorphismClass) -> MorphismClass {
        MorphismClass::from_fn(self.sub.num_morphisms(), |m| class.contains(self.embedding[m.0]))
    }

    fn extend(&self, class: &MorphismClass, universe: usize) -> MorphismClass {
        MorphismClass::from_members(universe, class.iter().map(|m| self.embedding[m.0]))
    }
}

/// Evaluates the five hypotheses of the induced-structure theorem on `mc`.
/// Pointed maps are the morphisms of the full subcategory on constant
/// diagrams; for connected shapes these are exactly the maps `P(f)`.
pub fn check_diagdown_hypotheses(idx: &DiagramIndex, mc: &ModelStructure) -> Result<DiagdownReport, DiagramError> {
    require_verified(mc, "diagram")?;
    let total = idx.total();
    let n = total.num_morphisms();
    check_universe(total, &[&mc.cof, &mc.fib, &mc.weq])?;

    let fib_components = components_of(idx, &mc.fib);
    let weq_components = components_of(idx, &mc.weq);
    let first = Check::inclusion(
        "i",
        "morphisms whose components are all fibration components are fibrations",
        &componentwise(idx, &fib_components),
        &mc.fib,
    );
    let second = Check::inclusion(
        "ii",
        "morphisms whose components are all weak-equivalence components are weak equivalences",
        &componentwise(idx, &weq_components),
        &mc.weq,
    );

    let p = Pointed::new(idx);
    let f_star = p.restrict(&mc.fib);
    let af_star = p.restrict(&mc.acyclic_fibrations());
    let w_star = p.restrict(&mc.weq);
    let llp_f = left_complement(&p.sub, &f_star);
    let llp_af = left_complement(&p.sub, &af_star);

    let third = Check::inclusion(
        "iii",
        "pointed maps with the LLP against pointed fibrations are weak equivalences",
        &p.extend(&llp_f, n),
        &mc.weq,
    );

    let sub_iv = {
        let mut ws = Vec::new();
        for (lhs, rhs) in [
            (right_complement(&p.sub, &llp_f), &f_star),
            (right_complement(&p.sub, &llp_af), &af_star),
        ] {
            ws.extend(p.extend(&lhs.symmetric_difference(rhs), n).iter().map(Witness::Morphism));
        }
        ws.sort();
        ws.dedup();
        Check::new("iv", "(⧄F⋆)^⧄ = F⋆ and (⧄(F⋆ ∩ W⋆))^⧄ = F⋆ ∩ W⋆ in the pointed subcategory", ws)
    };

    let ambient_iv = {
        let mut ws = Vec::new();
        for class in [&p.extend(&f_star, n), &p.extend(&af_star, n)] {
            let closed = right_complement(total, &left_complement(total, class)).intersection(&p.maps);
            ws.extend(closed.symmetric_difference(class).iter().map(Witness::Morphism));
        }
        ws.sort();
        ws.dedup();
        Check::new("iv (ambient)", "as (iv), complements taken in M^C then restricted to pointed maps", ws)
    };
    let readings_agree = sub_iv.outcome == ambient_iv.outcome;

    let fifth = Check::inclusion(
        "v",
        "pointed weak equivalences with the LLP against pointed acyclic fibrations have the LLP against pointed fibrations",
        &p.extend(&llp_af.intersection(&w_star), n),
        &p.extend(&llp_f, n),
    );

    Ok(DiagdownReport {
        hypotheses: vec![first, second, third, sub_iv, fifth],
        ambient_iv,
        readings_agree,
    })
}

/// The base structure recovered from component maps, with its checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedBase {
    pub structure: ModelStructure,
    pub hypotheses: DiagdownReport,
}

/// `F_M`, `W_M` are all components of fibrations and weak equivalences of
/// `mc`; `C_M = ⧄(F_M ∩ W_M)`. Fails unless the hypotheses hold and the
/// objectwise structure rebuilt from the result equals `mc`.
pub fn induced_base_structure(idx: &DiagramIndex, mc: &ModelStructure) -> Result<InducedBase, DiagramError> {
    let hypotheses = check_diagdown_hypotheses(idx, mc)?;
    if let Some(c) = hypotheses.hypotheses.iter().find(|c| !c.passed()) {
        return Err(DiagramError::HypothesisFailed { label: c.label.clone() });
    }
    let base = idx.base();
    let fib = components_of(idx, &mc.fib);
    let weq = components_of(idx, &mc.weq);
    let cof = left_complement(base, &fib.intersection(&weq));
    let structure = ModelStructure::checked(base, cof, fib, weq)?;
    require_verified(&structure, "induced base")?;
    let rebuilt = objectwise_structure(idx, &structure)?;
    let round_trip = class_equality("round trip", "objectwise rebuild equals the original", &rebuilt, mc);
    if !round_trip.passed() {
        return Err(DiagramError::RoundTrip(
            round_trip
                .witnesses()
                .iter()
                .filter_map(|w| match w {
                    Witness::Morphism(m) => Some(*m),
                    _ => None,
                })
                .collect(),
        ));
    }
    Ok(InducedBase { structure, hypotheses })
}

/// The right adjoint `G` to evaluation at `α`:
/// `G(y)(β) = ∏_{Hom(β, α)} y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductAdjoint {
    pub alpha: ObjId,
    /// `G(y)` as an object of `M^C`, indexed by base object `y`.
    pub on_objects: Vec<ObjId>,
    /// `G(g)` as a morphism of `M^C`, indexed by base morphism `g`.
    pub on_morphisms: Vec<MorId>,
    /// Counit `G(y)(α) → y`, the projection at `id_α`.
    pub counit: Vec<MorId>,
}

struct ProductAt {
    apex: ObjId,
    /// Projection per element of `Hom(β, α)`, same order as `shape.hom(β, α)`.
    projections: Vec<MorId>,
}

/// The unique `m: source → target` with `target_proj[k] ∘ m = legs[k]`.
fn mediator(base: &FiniteCategory, source: ObjId, target: &ProductAt, legs: &[MorId]) -> Option<MorId> {
    base.hom(source, target.apex).iter().copied().find(|&m| {
        target
            .projections
            .iter()
            .zip(legs)
            .all(|(&p, &l)| base.comp(p, m) == l)
    })
}

/// Materializes `G` and checks the bijection `Hom(X, G(y)) ≅ Hom(X(α), y)`
/// given by `φ ↦ ε_y ∘ φ(α)`, natural in `X` and `y`.
pub fn product_adjoint(idx: &DiagramIndex, alpha: ObjId) -> Result<ProductAdjoint, DiagramError> {
    let (base, shape, total) = (idx.base(), idx.shape(), idx.total());
    if alpha.0 >= shape.num_objects() {
        return Err(IndexError::UnknownShapeObject(alpha.0).into());
    }
    let products: Vec<Vec<ProductAt>> = base
        .objects()
        .map(|y| {
            shape
                .objects()
                .map(|beta| {
                    let copies = shape.hom(beta, alpha).len();
                    base.product(&vec![y; copies])
                        .map(|p| ProductAt {
                            apex: p.apex,
                            projections: p.projections,
                        })
                        .ok_or_else(|| DiagramError::MissingProduct {
                            beta: shape.object_name(beta).to_string(),
                            y: base.object_name(y).to_string(),
                            copies,
                        })
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;

    let bug = |what: String| DiagramError::Adjunction(what);
    let hom_index = |beta: ObjId, h: MorId| shape.hom(beta, alpha).iter().position(|&k| k == h).expect("hom member");

    let mut on_objects = Vec::new();
    for y in base.objects() {
        let at = &products[y.0];
        let mut functor = crate::fincat::Functor {
            on_objects: at.iter().map(|p| p.apex).collect(),
            on_morphisms: Vec::new(),
        };
        for u in shape.morphisms() {
            let (b, b2) = (shape.dom(u), shape.cod(u));
            let legs: Vec<MorId> = shape
                .hom(b2, alpha)
                .iter()
                .map(|&h2| at[b.0].projections[hom_index(b, shape.comp(h2, u))])
                .collect();
            let m = mediator(base, at[b.0].apex, &at[b2.0], &legs)
                .ok_or_else(|| bug(format!("G({}) has no image for a shape morphism", base.object_name(y))))?;
            functor.on_morphisms.push(m);
        }
        let x = idx
            .find_functor(&functor)
            .ok_or_else(|| bug(format!("G({}) is not a functor of the index", base.object_name(y))))?;
        on_objects.push(x);
    }

    let id_alpha = shape.identity(alpha);
    let counit: Vec<MorId> = base
        .objects()
        .map(|y| products[y.0][alpha.0].projections[hom_index(alpha, id_alpha)])
        .collect();

    let mut on_morphisms = Vec::new();
    for g in base.morphisms() {
        let (y, y2) = (base.dom(g), base.cod(g));
        let mut components = Vec::new();
        for beta in shape.objects() {
            let legs: Vec<MorId> = products[y.0][beta.0]
                .projections
                .iter()
                .map(|&p| base.comp(g, p))
                .collect();
            let m = mediator(base, products[y.0][beta.0].apex, &products[y2.0][beta.0], &legs)
                .ok_or_else(|| bug(format!("G({}) has no component", base.morphism_name(g))))?;
            components.push(m);
        }
        let phi = idx
            .from_components(on_objects[y.0], on_objects[y2.0], components)
            .ok_or_else(|| bug(format!("G({}) is not natural", base.morphism_name(g))))?;
        on_morphisms.push(phi);
    }

    let transpose = |phi: MorId, y: ObjId| base.comp(counit[y.0], idx.transformation(phi).components[alpha.0]);
    for x in total.objects() {
        for y in base.objects() {
            let homs = total.hom(x, on_objects[y.0]);
            let mut images: Vec<MorId> = homs.iter().map(|&phi| transpose(phi, y)).collect();
            images.sort();
            images.dedup();
            let mut expected = base.hom(idx.evaluate(x, alpha), y).to_vec();
            expected.sort();
            if images.len() != homs.len() || images != expected {
                return Err(bug(format!(
                    "Hom({}, G({})) is not in bijection with Hom(X(α), y)",
                    total.object_name(x),
                    base.object_name(y)
                )));
            }
            for &phi in homs {
                for psi in total.morphisms().filter(|&psi| total.cod(psi) == x) {
                    let lhs = transpose(total.comp(phi, psi), y);
                    let rhs = base.comp(transpose(phi, y), idx.transformation(psi).components[alpha.0]);
                    if lhs != rhs {
                        return Err(bug("bijection is not natural in X".into()));
                    }
                }
                for &g in base.outgoing(y) {
                    let y2 = base.cod(g);
                    let lhs = transpose(total.comp(on_morphisms[g.0], phi), y2);
                    if lhs != base.comp(g, transpose(phi, y)) {
                        return Err(bug("bijection is not natural in y".into()));
                    }
                }
            }
        }
    }

    Ok(ProductAdjoint {
        alpha,
        on_objects,
        on_morphisms,
        counit,
    })
}

/// For each weak factorization system `(L, R)` of `mc`, the `α`-components
/// of `L` lift against every component of a member of `R`. Witnesses are
/// squares in the base.
pub fn adjoint_lemma(idx: &DiagramIndex, mc: &ModelStructure, alpha: ObjId) -> Result<Vec<Check>, DiagramError> {
    require_verified(mc, "diagram")?;
    product_adjoint(idx, alpha)?;
    let base = idx.base();
    let systems = [
        ("(C ∩ W, F)", mc.acyclic_cofibrations(), mc.fib.clone()),
        ("(C, F ∩ W)", mc.cof.clone(), mc.acyclic_fibrations()),
    ];
    Ok(systems
        .into_iter()
        .map(|(name, left, right)| {
            let left_alpha = MorphismClass::from_members(
                base.num_morphisms(),
                left.iter().map(|l| idx.transformation(l).components[alpha.0]),
            );
            let right_star = components_of(idx, &right);
            let witness = lifting::lifting_violation(base, &left_alpha, &right_star)
                .map(|(l, r, square)| Witness::Square { left: l, right: r, square });
            Check::new(
                format!("lemma {name} at {}", idx.shape().object_name(alpha)),
                "α-components of the left class lift against components of the right class",
                witness.into_iter().collect(),
            )
        })
        .collect())
}

/// [`adjoint_lemma`] at every shape object, in parallel, in shape order.
pub fn adjoint_lemma_all(idx: &DiagramIndex, mc: &ModelStructure) -> Result<Vec<Check>, DiagramError> {
    let per_alpha: Result<Vec<Vec<Check>>, DiagramError> = idx
        .shape()
        .objects()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|alpha| adjoint_lemma(idx, mc, alpha))
        .collect();
    Ok(per_alpha?.into_iter().flatten().collect())
}
