//! Enumeration of every model structure on a small category and the
//! Bousfield quiver they form.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::class::MorphismClass;
use crate::delocalize::{right_intersect, DelocalizeError};
use crate::fincat::{FiniteCategory, MorId};
use crate::lifting::{left_complement, right_complement};
use crate::modelstruct::{factorization, ModelError, ModelStructure};

/// Default candidate ceiling for [`enumerate_model_structures`].
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Largest number of non-isomorphisms [`naive_scan`] accepts (`2^(3k)` triples).
pub const NAIVE_SCAN_LIMIT: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExploreError {
    #[error("search budget of {budget} candidates exceeded after {explored} (frontier still holds {frontier})")]
    BudgetExceeded {
        budget: usize,
        explored: usize,
        frontier: usize,
    },
    #[error("naive scan over {non_isos} non-isomorphisms exceeds the limit of {limit}")]
    ScanTooLarge { non_isos: usize, limit: usize },
    #[error("structure {index} is not verified")]
    Unverified { index: usize },
    #[error("structure {index} lives on a category with {found} morphisms, expected {expected}")]
    MixedCategories { index: usize, expected: usize, found: usize },
    #[error("node {index} out of range for a quiver with {nodes} nodes")]
    UnknownNode { index: usize, nodes: usize },
    #[error("right intersection of nodes {first} and {second} fails the axioms")]
    IntersectionRefuted { first: usize, second: usize },
    #[error(transparent)]
    Delocalize(#[from] DelocalizeError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// All classes of the form `L^⧄`, i.e. every intersection of the rows
/// `{l}^⧄`, sorted. These are exactly the classes with `R = (⧄R)^⧄`.
pub fn closed_right_classes(cat: &FiniteCategory, budget: usize) -> Result<Vec<MorphismClass>, ExploreError> {
    let n = cat.num_morphisms();
    let rows: BTreeSet<MorphismClass> = cat
        .morphisms()
        .map(|l| right_complement(cat, &MorphismClass::from_members(n, [l])))
        .collect();
    let mut seen = BTreeSet::from([cat.all()]);
    let mut frontier = vec![cat.all()];
    while let Some(x) = frontier.pop() {
        for row in &rows {
            let y = x.intersection(row);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                frontier.push(y);
                if seen.len() > budget {
                    return Err(ExploreError::BudgetExceeded {
                        budget,
                        explored: seen.len(),
                        frontier: frontier.len(),
                    });
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Every weak factorization system `(L, R)`, sorted by `R`.
pub fn weak_factorization_systems(
    cat: &FiniteCategory,
    budget: usize,
) -> Result<Vec<(MorphismClass, MorphismClass)>, ExploreError> {
    let rights = closed_right_classes(cat, budget)?;
    Ok(rights
        .into_par_iter()
        .filter_map(|r| {
            let l = left_complement(cat, &r);
            cat.morphisms()
                .all(|f| factorization(cat, f, &l, &r).is_some())
                .then_some((l, r))
        })
        .collect())
}

/// `{p ∘ i : i ∈ left, p ∈ right}`.
fn composites(cat: &FiniteCategory, left: &MorphismClass, right: &MorphismClass) -> MorphismClass {
    let mut out = cat.none();
    for i in left.iter() {
        for &p in cat.outgoing(cat.cod(i)) {
            if right.contains(p) {
                out.insert(cat.comp(p, i));
            }
        }
    }
    out
}

fn canonical(mut list: Vec<ModelStructure>) -> Vec<ModelStructure> {
    list.sort_by(ModelStructure::class_order);
    list.dedup_by(|a, b| a.same_classes(b));
    list
}

/// Every verified model structure, in canonical order. WFS pairs
/// `(C ∩ W, F)` and `(C, F ∩ W)` with nested classes are combined, and
/// `W = (F ∩ W) ∘ (C ∩ W)` is then checked by the axiom verifier.
pub fn enumerate_model_structures(cat: &FiniteCategory, budget: usize) -> Result<Vec<ModelStructure>, ExploreError> {
    let systems = weak_factorization_systems(cat, budget)?;
    let pairs: Vec<(usize, usize)> = (0..systems.len())
        .flat_map(|a| (0..systems.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| {
            let ((ac, f), (c, af)) = (&systems[a], &systems[b]);
            ac.is_subset(c) && af.is_subset(f)
        })
        .collect();
    let explored = systems.len() + pairs.len();
    if explored > budget {
        return Err(ExploreError::BudgetExceeded {
            budget,
            explored,
            frontier: 0,
        });
    }
    let found: Result<Vec<Option<ModelStructure>>, ModelError> = pairs
        .into_par_iter()
        .map(|(a, b)| {
            let ((ac, f), (c, af)) = (&systems[a], &systems[b]);
            let w = composites(cat, ac, af);
            let m = ModelStructure::checked(cat, c.clone(), f.clone(), w)?;
            Ok(m.is_verified().then_some(m))
        })
        .collect();
    Ok(canonical(found?.into_iter().flatten().collect()))
}

/// Brute-force oracle: every triple of classes containing all isomorphisms,
/// run through the axiom verifier.
pub fn naive_scan(cat: &FiniteCategory) -> Result<Vec<ModelStructure>, ExploreError> {
    let isos = cat.isomorphisms();
    let free: Vec<MorId> = isos.complement().members();
    let k = free.len();
    if k > NAIVE_SCAN_LIMIT {
        return Err(ExploreError::ScanTooLarge {
            non_isos: k,
            limit: NAIVE_SCAN_LIMIT,
        });
    }
    let class_of = |bits: u32| {
        let mut c = isos.clone();
        for (i, &m) in free.iter().enumerate() {
            if bits >> i & 1 == 1 {
                c.insert(m);
            }
        }
        c
    };
    let mask = (1u32 << k) - 1;
    let found: Result<Vec<Option<ModelStructure>>, ModelError> = (0..1u32 << (3 * k))
        .into_par_iter()
        .map(|bits| {
            let (c, f, w) = (class_of(bits & mask), class_of(bits >> k & mask), class_of(bits >> (2 * k)));
            let m = ModelStructure::checked(cat, c, f, w)?;
            Ok(m.is_verified().then_some(m))
        })
        .collect();
    Ok(canonical(found?.into_iter().flatten().collect()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub kind: EdgeKind,
}

/// Verified structures as nodes; an edge `a → b` says `b` is a (left or
/// right) Bousfield localization of `a`. No self-loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BousfieldQuiver {
    pub nodes: Vec<ModelStructure>,
    pub edges: Vec<Edge>,
}

fn edges_of(nodes: &[ModelStructure]) -> Vec<Edge> {
    let mut edges = Vec::new();
    for (s, a) in nodes.iter().enumerate() {
        for (t, b) in nodes.iter().enumerate() {
            if s == t || !a.weq.is_subset(&b.weq) {
                continue;
            }
            if a.cof == b.cof {
                edges.push(Edge { source: s, target: t, kind: EdgeKind::Left });
            }
            if a.fib == b.fib {
                edges.push(Edge { source: s, target: t, kind: EdgeKind::Right });
            }
        }
    }
    edges
}

/// Deduplicates, sorts canonically and computes every edge.
pub fn build_quiver(cat: &FiniteCategory, structures: &[ModelStructure]) -> Result<BousfieldQuiver, ExploreError> {
    for (index, m) in structures.iter().enumerate() {
        let found = m.cof.universe();
        if [&m.cof, &m.fib, &m.weq].iter().any(|c| c.universe() != cat.num_morphisms()) {
            return Err(ExploreError::MixedCategories {
                index,
                expected: cat.num_morphisms(),
                found,
            });
        }
        if !m.is_verified() {
            return Err(ExploreError::Unverified { index });
        }
    }
    let nodes = canonical(structures.to_vec());
    let edges = edges_of(&nodes);
    Ok(BousfieldQuiver { nodes, edges })
}

impl BousfieldQuiver {
    pub fn find(&self, m: &ModelStructure) -> Option<usize> {
        self.nodes.iter().position(|n| n.same_classes(m))
    }

    pub fn has_edge(&self, source: usize, target: usize, kind: EdgeKind) -> bool {
        self.edges.binary_search(&Edge { source, target, kind }).is_ok()
    }

    fn check_node(&self, index: usize) -> Result<(), ExploreError> {
        if index < self.nodes.len() {
            Ok(())
        } else {
            Err(ExploreError::UnknownNode {
                index,
                nodes: self.nodes.len(),
            })
        }
    }

    /// Pairs `(a, b)` with `a < b` sharing their fibrations.
    pub fn same_fibration_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.nodes.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.nodes[a].fib == self.nodes[b].fib)
            .collect()
    }

    pub fn to_dot(&self, cat: &FiniteCategory) -> String {
        let label = |c: &MorphismClass| {
            let names: Vec<String> = cat.class_names(c).into_iter().filter(|s| !s.starts_with("id_")).collect();
            format!("{{{}}}", names.join(", "))
        };
        let mut out = String::from("digraph bousfield {\n  node [shape=box];\n");
        for (i, m) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{i} [label=\"n{i}\\nC={}\\nF={}\\nW={}\"];",
                label(&m.cof),
                label(&m.fib),
                label(&m.weq)
            );
        }
        for e in &self.edges {
            let style = match e.kind {
                EdgeKind::Left => "dashed",
                EdgeKind::Right => "solid",
            };
            let _ = writeln!(
                out,
                "  n{} -> n{} [style={style}, label=\"{}\"];",
                e.source,
                e.target,
                match e.kind {
                    EdgeKind::Left => "left",
                    EdgeKind::Right => "right",
                }
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn export(&self, cat: &FiniteCategory) -> QuiverExport {
        QuiverExport {
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(index, m)| QuiverNode {
                    index,
                    cof: cat.class_names(&m.cof),
                    fib: cat.class_names(&m.fib),
                    weq: cat.class_names(&m.weq),
                })
                .collect(),
            edges: self.edges.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverNode {
    pub index: usize,
    pub cof: Vec<String>,
    pub fib: Vec<String>,
    pub weq: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverExport {
    pub nodes: Vec<QuiverNode>,
    pub edges: Vec<Edge>,
}

/// Connected components of the underlying undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    /// Each component sorted, components ordered by their least node.
    pub components: Vec<Vec<usize>>,
    /// Least nodes of the first two components when disconnected.
    pub disconnected: Option<(usize, usize)>,
}

pub fn component_analysis(q: &BousfieldQuiver) -> Components {
    let n = q.nodes.len();
    let mut uf = UnionFind::<usize>::new(n);
    for e in &q.edges {
        uf.union(e.source, e.target);
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let root = uf.find_mut(v);
        if slot[root] == usize::MAX {
            slot[root] = components.len();
            components.push(Vec::new());
        }
        components[slot[root]].push(v);
    }
    let disconnected = (components.len() > 1).then(|| (components[0][0], components[1][0]));
    Components {
        components,
        disconnected,
    }
}

/// Constructive connection of two same-fibration nodes through their
/// right intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub first: usize,
    pub second: usize,
    pub intersection: usize,
    /// The intersection was not among the nodes and had to be inserted.
    pub newly_discovered: bool,
    /// Right edge (or equality) from the intersection to each input.
    pub reaches_first: bool,
    pub reaches_second: bool,
}

impl Certificate {
    pub fn certified(&self) -> bool {
        !self.newly_discovered && self.reaches_first && self.reaches_second
    }
}

/// Builds `n = right_intersect(a, b)`, locates it in `q` (inserting it and
/// flagging the insertion if absent) and confirms right edges `n → a`, `n → b`.
pub fn corollary_check(
    cat: &FiniteCategory,
    q: &mut BousfieldQuiver,
    first: usize,
    second: usize,
) -> Result<Certificate, ExploreError> {
    q.check_node(first)?;
    q.check_node(second)?;
    let (a, b) = (q.nodes[first].clone(), q.nodes[second].clone());
    let n = right_intersect(cat, &a, &b)?;
    if !n.is_verified() {
        return Err(ExploreError::IntersectionRefuted { first, second });
    }
    let (intersection, newly_discovered) = match q.find(&n) {
        Some(i) => (i, false),
        None => {
            let mut nodes = q.nodes.clone();
            nodes.push(n.clone());
            *q = build_quiver(cat, &nodes)?;
            (q.find(&n).expect("inserted node"), true)
        }
    };
    let (first, second) = (q.find(&a).expect("input node"), q.find(&b).expect("input node"));
    let reaches = |t: usize| t == intersection || q.has_edge(intersection, t, EdgeKind::Right);
    Ok(Certificate {
        first,
        second,
        intersection,
        newly_discovered,
        reaches_first: reaches(first),
        reaches_second: reaches(second),
    })
}

/// Certificates for every same-fibration pair.
pub fn certify_all(cat: &FiniteCategory, q: &BousfieldQuiver) -> Result<Vec<Certificate>, ExploreError> {
    let mut work = q.clone();
    q.same_fibration_pairs()
        .into_iter()
        .map(|(a, b)| corollary_check(cat, &mut work, a, b))
        .collect()
}
