//! Finite categories given by total composition tables.
//!
//! Ids from input are strings; internally every object and morphism gets a
//! dense index assigned in sorted-id order, so two categories built from the
//! same description always have identical tables.

mod functor;
mod spec;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::class::MorphismClass;
use crate::lifting::{LiftTable, RetractTable};

pub use functor::{functor_category, DiagramIndex, Functor, IndexError, NatTrans, DEFAULT_OBJECT_CAP};
pub use spec::{CategorySpec, RawCategory, RawMorphism, RawPoset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ObjId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MorId(pub usize);

const UNDEFINED: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("duplicate object id `{0}`")]
    DuplicateObject(String),
    #[error("duplicate morphism id `{0}`")]
    DuplicateMorphism(String),
    #[error("{context} refers to unknown object `{object}`")]
    UnknownObject { context: String, object: String },
    #[error("{context} refers to unknown morphism `{morphism}`")]
    UnknownMorphism { context: String, morphism: String },
    #[error("identity `{morphism}` of object `{object}` is not an endomorphism of `{object}`")]
    BadIdentity { object: String, morphism: String },
    #[error("composition entry ({g}, {f}) is not composable: cod({f}) = `{cod_f}` but dom({g}) = `{dom_g}`")]
    NotComposable {
        g: String,
        f: String,
        cod_f: String,
        dom_g: String,
    },
    #[error("composite of ({g}, {f}) is `{composite}` with endpoints {found}, expected {expected}")]
    CompositeEndpoints {
        g: String,
        f: String,
        composite: String,
        found: String,
        expected: String,
    },
    #[error("conflicting composites for ({g}, {f}): `{first}` and `{second}`")]
    ConflictingComposite {
        g: String,
        f: String,
        first: String,
        second: String,
    },
    #[error("identity law violated at ({g}, {f}): composite must be `{expected}`, table gives `{found}`")]
    IdentityLaw {
        g: String,
        f: String,
        expected: String,
        found: String,
    },
    #[error("missing composite for composable pair ({g}, {f})")]
    MissingComposite { g: String, f: String },
    #[error("associativity fails at ({h}, {g}, {f}): ({h}∘{g})∘{f} = `{left}` but {h}∘({g}∘{f}) = `{right}`")]
    NonAssociative {
        h: String,
        g: String,
        f: String,
        left: String,
        right: String,
    },
    #[error("order relation has a cycle: `{0}` <= `{1}` <= `{0}`")]
    Cycle(String, String),
    #[error("functor category too large: {needed} candidate object assignments exceed cap {cap}")]
    CapExceeded { needed: u128, cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct MorphismEntry {
    name: String,
    dom: ObjId,
    cod: ObjId,
}

/// A validated finite category.
///
/// Immutable after construction. The lifting and retract tables are filled
/// lazily on first use and shared by every later query.
#[derive(Clone)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismEntry>,
    identity: Vec<MorId>,
    compose: Vec<u32>,
    hom: Vec<Vec<MorId>>,
    outgoing: Vec<Vec<MorId>>,
    object_index: HashMap<String, ObjId>,
    morphism_index: HashMap<String, MorId>,
    pub(crate) lift_cache: OnceLock<LiftTable>,
    pub(crate) retract_cache: OnceLock<RetractTable>,
}

/// A pushout cocone of a span `b <-f- a -g-> c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pushout {
    pub apex: ObjId,
    /// `b -> apex`
    pub first_leg: MorId,
    /// `c -> apex`; the pushout of `f` along `g`.
    pub second_leg: MorId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub apex: ObjId,
    pub projections: Vec<MorId>,
}

/// The four maps exhibiting `f` as a retract of `g` in the arrow category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RetractData {
    pub section_dom: MorId,
    pub retraction_dom: MorId,
    pub section_cod: MorId,
    pub retraction_cod: MorId,
}

pub fn validate_category(raw: &RawCategory) -> Result<FiniteCategory, CategoryError> {
    let mut objects = raw.objects.clone();
    objects.sort();
    if let Some(w) = objects.windows(2).find(|w| w[0] == w[1]) {
        return Err(CategoryError::DuplicateObject(w[0].clone()));
    }
    let object_index: HashMap<String, ObjId> = objects
        .iter()
        .enumerate()
        .map(|(i, o)| (o.clone(), ObjId(i)))
        .collect();
    let lookup_obj = |context: &str, name: &str| {
        object_index
            .get(name)
            .copied()
            .ok_or_else(|| CategoryError::UnknownObject {
                context: context.to_string(),
                object: name.to_string(),
            })
    };

    let mut entries: Vec<MorphismEntry> = Vec::with_capacity(raw.morphisms.len() + objects.len());
    for m in &raw.morphisms {
        let context = format!("morphism `{}`", m.id);
        entries.push(MorphismEntry {
            name: m.id.clone(),
            dom: lookup_obj(&context, &m.dom)?,
            cod: lookup_obj(&context, &m.cod)?,
        });
    }
    for key in raw.identities.keys() {
        lookup_obj("identities table", key)?;
    }

    // Identity names: explicit table, then a listed `id_x`, then auto-insert.
    let mut identity_names = Vec::with_capacity(objects.len());
    for (i, obj) in objects.iter().enumerate() {
        let name = raw
            .identities
            .get(obj)
            .cloned()
            .unwrap_or_else(|| format!("id_{obj}"));
        match entries.iter().find(|e| e.name == name) {
            Some(e) if e.dom == ObjId(i) && e.cod == ObjId(i) => {}
            Some(_) => {
                return Err(CategoryError::BadIdentity {
                    object: obj.clone(),
                    morphism: name,
                })
            }
            None if raw.identities.contains_key(obj) => {
                return Err(CategoryError::UnknownMorphism {
                    context: format!("identity of `{obj}`"),
                    morphism: name,
                })
            }
            None => entries.push(MorphismEntry {
                name: name.clone(),
                dom: ObjId(i),
                cod: ObjId(i),
            }),
        }
        identity_names.push(name);
    }

    entries.sort_by(|a, b| a.name.cmp(&b.name));
    if let Some(w) = entries.windows(2).find(|w| w[0].name == w[1].name) {
        return Err(CategoryError::DuplicateMorphism(w[0].name.clone()));
    }
    let morphism_index: HashMap<String, MorId> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| (e.name.clone(), MorId(i)))
        .collect();
    let identity: Vec<MorId> = identity_names
        .iter()
        .map(|n| morphism_index[n.as_str()])
        .collect();

    let n = entries.len();
    let mut compose = vec![UNDEFINED; n * n];
    for (i, e) in entries.iter().enumerate() {
        compose[identity[e.cod.0].0 * n + i] = i as u32;
        compose[i * n + identity[e.dom.0].0] = i as u32;
    }

    let lookup_mor = |context: &str, name: &str| {
        morphism_index
            .get(name)
            .copied()
            .ok_or_else(|| CategoryError::UnknownMorphism {
                context: context.to_string(),
                morphism: name.to_string(),
            })
    };
    let endpoints = |dom: ObjId, cod: ObjId| format!("{} -> {}", objects[dom.0], objects[cod.0]);
    for [g_name, f_name, gf_name] in &raw.composition {
        let context = format!("composition entry [{g_name}, {f_name}, {gf_name}]");
        let g = lookup_mor(&context, g_name)?;
        let f = lookup_mor(&context, f_name)?;
        let gf = lookup_mor(&context, gf_name)?;
        let (eg, ef, egf) = (&entries[g.0], &entries[f.0], &entries[gf.0]);
        if ef.cod != eg.dom {
            return Err(CategoryError::NotComposable {
                g: g_name.clone(),
                f: f_name.clone(),
                cod_f: objects[ef.cod.0].clone(),
                dom_g: objects[eg.dom.0].clone(),
            });
        }
        if egf.dom != ef.dom || egf.cod != eg.cod {
            return Err(CategoryError::CompositeEndpoints {
                g: g_name.clone(),
                f: f_name.clone(),
                composite: gf_name.clone(),
                found: endpoints(egf.dom, egf.cod),
                expected: endpoints(ef.dom, eg.cod),
            });
        }
        let slot = &mut compose[g.0 * n + f.0];
        if *slot != UNDEFINED && *slot != gf.0 as u32 {
            let existing = entries[*slot as usize].name.clone();
            let involves_identity = identity.contains(&g) || identity.contains(&f);
            return Err(if involves_identity {
                CategoryError::IdentityLaw {
                    g: g_name.clone(),
                    f: f_name.clone(),
                    expected: existing,
                    found: gf_name.clone(),
                }
            } else {
                CategoryError::ConflictingComposite {
                    g: g_name.clone(),
                    f: f_name.clone(),
                    first: existing,
                    second: gf_name.clone(),
                }
            });
        }
        *slot = gf.0 as u32;
    }

    let n_obj = objects.len();
    let mut hom = vec![Vec::new(); n_obj * n_obj];
    let mut outgoing = vec![Vec::new(); n_obj];
    for (i, e) in entries.iter().enumerate() {
        hom[e.dom.0 * n_obj + e.cod.0].push(MorId(i));
        outgoing[e.dom.0].push(MorId(i));
    }

    for (f, ef) in entries.iter().enumerate() {
        for &g in &outgoing[ef.cod.0] {
            if compose[g.0 * n + f] == UNDEFINED {
                return Err(CategoryError::MissingComposite {
                    g: entries[g.0].name.clone(),
                    f: ef.name.clone(),
                });
            }
        }
    }

    for (f, ef) in entries.iter().enumerate() {
        for &g in &outgoing[ef.cod.0] {
            let gf = compose[g.0 * n + f] as usize;
            for &h in &outgoing[entries[g.0].cod.0] {
                let hg = compose[h.0 * n + g.0] as usize;
                let left = compose[hg * n + f];
                let right = compose[h.0 * n + gf];
                if left != right {
                    return Err(CategoryError::NonAssociative {
                        h: entries[h.0].name.clone(),
                        g: entries[g.0].name.clone(),
                        f: ef.name.clone(),
                        left: entries[left as usize].name.clone(),
                        right: entries[right as usize].name.clone(),
                    });
                }
            }
        }
    }

    Ok(FiniteCategory {
        objects,
        morphisms: entries,
        identity,
        compose,
        hom,
        outgoing,
        object_index,
        morphism_index,
        lift_cache: OnceLock::new(),
        retract_cache: OnceLock::new(),
    })
}

/// Name of the unique morphism `a -> b` in a poset category.
pub fn order_morphism_name(a: &str, b: &str) -> String {
    if a == b {
        format!("id_{a}")
    } else {
        format!("{a}->{b}")
    }
}

/// The category with one morphism `x -> y` exactly when `x <= y` in the
/// reflexive-transitive closure of `leq`.
pub fn poset_category<S: AsRef<str>>(
    elements: &[S],
    leq: &[(S, S)],
) -> Result<FiniteCategory, CategoryError> {
    let mut names: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
    names.sort();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(CategoryError::DuplicateObject(w[0].clone()));
    }
    let index: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let k = names.len();
    let mut le = vec![false; k * k];
    for i in 0..k {
        le[i * k + i] = true;
    }
    for (a, b) in leq {
        let find = |x: &str| {
            index.get(x).copied().ok_or_else(|| CategoryError::UnknownObject {
                context: "order relation".to_string(),
                object: x.to_string(),
            })
        };
        let (ia, ib) = (find(a.as_ref())?, find(b.as_ref())?);
        le[ia * k + ib] = true;
    }
    for m in 0..k {
        for i in 0..k {
            if le[i * k + m] {
                for j in 0..k {
                    if le[m * k + j] {
                        le[i * k + j] = true;
                    }
                }
            }
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if le[i * k + j] && le[j * k + i] {
                return Err(CategoryError::Cycle(names[i].clone(), names[j].clone()));
            }
        }
    }

    let mut raw = RawCategory {
        objects: names.clone(),
        ..RawCategory::default()
    };
    for i in 0..k {
        for j in 0..k {
            if i != j && le[i * k + j] {
                raw.morphisms.push(RawMorphism {
                    id: order_morphism_name(&names[i], &names[j]),
                    dom: names[i].clone(),
                    cod: names[j].clone(),
                });
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                if i != j && j != l && le[i * k + j] && le[j * k + l] {
                    raw.composition.push([
                        order_morphism_name(&names[j], &names[l]),
                        order_morphism_name(&names[i], &names[j]),
                        order_morphism_name(&names[i], &names[l]),
                    ]);
                }
            }
        }
    }
    validate_category(&raw)
}

impl FiniteCategory {
    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + Clone {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> + Clone {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism_name(&self, m: MorId) -> &str {
        &self.morphisms[m.0].name
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.object_index.get(name).copied()
    }

    pub fn find_morphism(&self, name: &str) -> Option<MorId> {
        self.morphism_index.get(name).copied()
    }

    pub fn dom(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].dom
    }

    pub fn cod(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].cod
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identity[x.0]
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        self.identity[self.dom(m).0] == m
    }

    /// `g ∘ f`, defined exactly when `cod f = dom g`.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        let c = self.compose[g.0 * self.morphisms.len() + f.0];
        (c != UNDEFINED).then_some(MorId(c as usize))
    }

    /// `g ∘ f` for a pair already known to be composable.
    pub(crate) fn comp(&self, g: MorId, f: MorId) -> MorId {
        MorId(self.compose[g.0 * self.morphisms.len() + f.0] as usize)
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> &[MorId] {
        &self.hom[a.0 * self.objects.len() + b.0]
    }

    /// All morphisms with domain `a`, in index order.
    pub fn outgoing(&self, a: ObjId) -> &[MorId] {
        &self.outgoing[a.0]
    }

    /// True when every hom-set has at most one element.
    pub fn is_thin(&self) -> bool {
        self.hom.iter().all(|h| h.len() <= 1)
    }

    pub fn all(&self) -> MorphismClass {
        MorphismClass::full(self.num_morphisms())
    }

    pub fn none(&self) -> MorphismClass {
        MorphismClass::empty(self.num_morphisms())
    }

    pub fn identities(&self) -> MorphismClass {
        MorphismClass::from_members(self.num_morphisms(), self.identity.iter().copied())
    }

    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (a, b) = (self.dom(f), self.cod(f));
        self.hom(b, a).iter().copied().find(|&g| {
            self.comp(g, f) == self.identity(a) && self.comp(f, g) == self.identity(b)
        })
    }

    pub fn isomorphisms(&self) -> MorphismClass {
        MorphismClass::from_fn(self.num_morphisms(), |m| self.inverse(m).is_some())
    }

    /// Class from morphism names; unknown names are reported.
    pub fn class_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<MorphismClass, CategoryError> {
        let mut class = self.none();
        for n in names {
            let m = self
                .find_morphism(n.as_ref())
                .ok_or_else(|| CategoryError::UnknownMorphism {
                    context: "morphism class".to_string(),
                    morphism: n.as_ref().to_string(),
                })?;
            class.insert(m);
        }
        Ok(class)
    }

    pub fn class_names(&self, class: &MorphismClass) -> Vec<String> {
        class.iter().map(|m| self.morphism_name(m).to_string()).collect()
    }

    /// A pushout of `b <-f- a -g-> c`, verified universal against every
    /// competing cocone. The first universal cocone in index order wins.
    pub fn pushout(&self, f: MorId, g: MorId) -> Option<Pushout> {
        if self.dom(f) != self.dom(g) {
            return None;
        }
        let (b, c) = (self.cod(f), self.cod(g));
        let mut cocones = Vec::new();
        for p in self.objects() {
            for &u in self.hom(b, p) {
                for &v in self.hom(c, p) {
                    if self.comp(u, f) == self.comp(v, g) {
                        cocones.push((p, u, v));
                    }
                }
            }
        }
        cocones.iter().find_map(|&(p, u, v)| {
            let universal = cocones.iter().all(|&(q, u2, v2)| {
                self.hom(p, q)
                    .iter()
                    .filter(|&&m| self.comp(m, u) == u2 && self.comp(m, v) == v2)
                    .count()
                    == 1
            });
            universal.then_some(Pushout {
                apex: p,
                first_leg: u,
                second_leg: v,
            })
        })
    }

    /// The four maps exhibiting `f` as a retract of `g`, if any.
    pub fn retract_data(&self, f: MorId, g: MorId) -> Option<RetractData> {
        let (df, cf, dg, cg) = (self.dom(f), self.cod(f), self.dom(g), self.cod(g));
        for &i in self.hom(df, dg) {
            for &r in self.hom(dg, df) {
                if self.comp(r, i) != self.identity(df) {
                    continue;
                }
                for &j in self.hom(cf, cg) {
                    if self.comp(g, i) != self.comp(j, f) {
                        continue;
                    }
                    for &s in self.hom(cg, cf) {
                        if self.comp(s, j) == self.identity(cf)
                            && self.comp(f, r) == self.comp(s, g)
                        {
                            return Some(RetractData {
                                section_dom: i,
                                retraction_dom: r,
                                section_cod: j,
                                retraction_cod: s,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    /// Whether `f` is a retract of `g` in the arrow category.
    pub fn is_retract(&self, f: MorId, g: MorId) -> bool {
        self.retract_data(f, g).is_some()
    }

    /// A product of the listed objects (the empty list asks for a terminal
    /// object), verified universal by exhaustive cone comparison.
    pub fn product(&self, factors: &[ObjId]) -> Option<Product> {
        let cones_at = |apex: ObjId| -> Vec<Vec<MorId>> {
            let homs: Vec<&[MorId]> = factors.iter().map(|&y| self.hom(apex, y)).collect();
            cartesian(&homs)
        };
        let all_cones: Vec<(ObjId, Vec<MorId>)> = self
            .objects()
            .flat_map(|q| cones_at(q).into_iter().map(move |c| (q, c)))
            .collect();
        all_cones.iter().find_map(|(p, proj)| {
            let universal = all_cones.iter().all(|(q, legs)| {
                self.hom(*q, *p)
                    .iter()
                    .filter(|&&m| proj.iter().zip(legs).all(|(&pk, &lk)| self.comp(pk, m) == lk))
                    .count()
                    == 1
            });
            universal.then(|| Product {
                apex: *p,
                projections: proj.clone(),
            })
        })
    }

    /// Full subcategory on the given objects, with the embedding of its
    /// morphisms into `self`.
    pub fn full_subcategory(&self, objects: &[ObjId]) -> (FiniteCategory, Vec<MorId>) {
        let mut keep = vec![false; self.num_objects()];
        for &x in objects {
            keep[x.0] = true;
        }
        let kept = |m: MorId| keep[self.dom(m).0] && keep[self.cod(m).0];
        let mut raw = RawCategory {
            objects: objects.iter().map(|&x| self.object_name(x).to_string()).collect(),
            ..RawCategory::default()
        };
        for m in self.morphisms().filter(|&m| kept(m)) {
            raw.morphisms.push(self.raw_morphism(m));
        }
        for &x in objects {
            raw.identities.insert(
                self.object_name(x).to_string(),
                self.morphism_name(self.identity(x)).to_string(),
            );
        }
        for f in self.morphisms().filter(|&m| kept(m)) {
            for &g in self.outgoing(self.cod(f)) {
                if kept(g) {
                    raw.composition.push(self.raw_triple(g, f));
                }
            }
        }
        let sub = validate_category(&raw).expect("full subcategory of a valid category is valid");
        let embedding = sub
            .morphisms()
            .map(|m| self.find_morphism(sub.morphism_name(m)).expect("name preserved"))
            .collect();
        (sub, embedding)
    }

    fn raw_morphism(&self, m: MorId) -> RawMorphism {
        RawMorphism {
            id: self.morphism_name(m).to_string(),
            dom: self.object_name(self.dom(m)).to_string(),
            cod: self.object_name(self.cod(m)).to_string(),
        }
    }

    fn raw_triple(&self, g: MorId, f: MorId) -> [String; 3] {
        [
            self.morphism_name(g).to_string(),
            self.morphism_name(f).to_string(),
            self.morphism_name(self.comp(g, f)).to_string(),
        ]
    }

    /// The full description, with explicit identities and every composite
    /// not involving an identity. Re-validating it yields an equal category.
    pub fn to_raw(&self) -> RawCategory {
        let mut raw = RawCategory {
            objects: self.objects.clone(),
            ..RawCategory::default()
        };
        for m in self.morphisms() {
            raw.morphisms.push(self.raw_morphism(m));
        }
        for x in self.objects() {
            raw.identities.insert(
                self.object_name(x).to_string(),
                self.morphism_name(self.identity(x)).to_string(),
            );
        }
        for f in self.morphisms().filter(|&f| !self.is_identity(f)) {
            for &g in self.outgoing(self.cod(f)) {
                if !self.is_identity(g) {
                    raw.composition.push(self.raw_triple(g, f));
                }
            }
        }
        raw
    }

    /// Counts used in summaries: objects, morphisms, identities excluded.
    pub fn summary(&self) -> CategorySummary {
        CategorySummary {
            objects: self.num_objects(),
            morphisms: self.num_morphisms(),
            non_identity_morphisms: self.num_morphisms() - self.num_objects(),
            isomorphisms: self.isomorphisms().count(),
            thin: self.is_thin(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CategorySummary {
    pub objects: usize,
    pub morphisms: usize,
    pub non_identity_morphisms: usize,
    pub isomorphisms: usize,
    pub thin: bool,
}

pub(crate) fn cartesian(choices: &[&[MorId]]) -> Vec<Vec<MorId>> {
    let mut out = vec![Vec::with_capacity(choices.len())];
    for options in choices {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for &m in options.iter() {
                let mut v = prefix.clone();
                v.push(m);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

impl PartialEq for FiniteCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identity == other.identity
            && self.compose == other.compose
    }
}

impl Eq for FiniteCategory {}

impl fmt::Debug for FiniteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: BTreeMap<&str, String> = self
            .morphisms
            .iter()
            .map(|e| {
                (
                    e.name.as_str(),
                    format!("{} -> {}", self.objects[e.dom.0], self.objects[e.cod.0]),
                )
            })
            .collect();
        f.debug_struct("FiniteCategory")
            .field("objects", &self.objects)
            .field("morphisms", &names)
            .finish()
    }
}
