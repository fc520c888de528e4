//! Functor categories `M^C` materialized as finite categories.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use super::{cartesian, validate_category, CategoryError, FiniteCategory, MorId, ObjId, RawCategory, RawMorphism};

/// Default ceiling on `|Ob(M)|^|Ob(C)|`.
pub const DEFAULT_OBJECT_CAP: usize = 4096;

/// A functor `C -> M`, indexed by shape object and shape morphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Functor {
    pub on_objects: Vec<ObjId>,
    pub on_morphisms: Vec<MorId>,
}

/// A natural transformation between two objects of the functor category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NatTrans {
    pub source: ObjId,
    pub target: ObjId,
    /// One base morphism per shape object.
    pub components: Vec<MorId>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("shape object {0} does not exist")]
    UnknownShapeObject(usize),
    #[error("base object {0} does not exist")]
    UnknownBaseObject(usize),
    #[error("base morphism {0} does not exist")]
    UnknownBaseMorphism(usize),
    #[error("functor-category morphism {0} does not exist")]
    UnknownMorphism(usize),
    #[error("constant diagram at `{0}` is missing from the index")]
    MissingConstant(String),
}

/// The category of diagrams `M^C` with its object and morphism tables.
#[derive(Clone, Debug)]
pub struct DiagramIndex {
    base: Arc<FiniteCategory>,
    shape: Arc<FiniteCategory>,
    total: Arc<FiniteCategory>,
    functors: Vec<Functor>,
    transformations: Vec<NatTrans>,
    functor_lookup: HashMap<Functor, ObjId>,
    transformation_lookup: HashMap<NatTrans, MorId>,
}

fn functors(base: &FiniteCategory, shape: &FiniteCategory) -> Vec<Functor> {
    let n_shape = shape.num_objects();
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n_shape];
    let base_objs = base.num_objects();
    if n_shape > 0 && base_objs == 0 {
        return out;
    }
    loop {
        let on_objects: Vec<ObjId> = assignment.iter().map(|&i| ObjId(i)).collect();
        let choices: Vec<&[MorId]> = shape
            .morphisms()
            .map(|h| {
                let (a, b) = (on_objects[shape.dom(h).0], on_objects[shape.cod(h).0]);
                if shape.is_identity(h) {
                    std::slice::from_ref(&base.identity[a.0])
                } else {
                    base.hom(a, b)
                }
            })
            .collect();
        for on_morphisms in cartesian(&choices) {
            let functorial = shape.morphisms().all(|h1| {
                shape.outgoing(shape.cod(h1)).iter().all(|&h2| {
                    base.comp(on_morphisms[h2.0], on_morphisms[h1.0])
                        == on_morphisms[shape.comp(h2, h1).0]
                })
            });
            if functorial {
                out.push(Functor {
                    on_objects: on_objects.clone(),
                    on_morphisms,
                });
            }
        }
        // odometer over object assignments
        let mut pos = 0;
        loop {
            if pos == n_shape {
                return out;
            }
            assignment[pos] += 1;
            if assignment[pos] < base_objs {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

fn functor_name(base: &FiniteCategory, shape: &FiniteCategory, f: &Functor) -> String {
    let mut name = String::from("(");
    for (i, x) in f.on_objects.iter().enumerate() {
        if i > 0 {
            name.push(',');
        }
        name.push_str(base.object_name(*x));
    }
    if !base.is_thin() {
        name.push('|');
        let images: Vec<&str> = shape
            .morphisms()
            .filter(|&h| !shape.is_identity(h))
            .map(|h| base.morphism_name(f.on_morphisms[h.0]))
            .collect();
        name.push_str(&images.join(","));
    }
    name.push(')');
    name
}

/// Builds `M^C`: objects are all functors `C -> M`, morphisms all natural
/// transformations. Fails rather than truncates when `|Ob M|^|Ob C|`
/// exceeds `cap`.
pub fn functor_category(
    base: Arc<FiniteCategory>,
    shape: Arc<FiniteCategory>,
    cap: usize,
) -> Result<DiagramIndex, CategoryError> {
    let needed = (base.num_objects() as u128)
        .checked_pow(shape.num_objects() as u32)
        .unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(CategoryError::CapExceeded { needed, cap });
    }

    let fs = functors(&base, &shape);
    let names: Vec<String> = fs.iter().map(|f| functor_name(&base, &shape, f)).collect();

    let mut transformations: Vec<NatTrans> = Vec::new();
    for (xi, x) in fs.iter().enumerate() {
        for (yi, y) in fs.iter().enumerate() {
            let choices: Vec<&[MorId]> = shape
                .objects()
                .map(|a| base.hom(x.on_objects[a.0], y.on_objects[a.0]))
                .collect();
            for components in cartesian(&choices) {
                let natural = shape.morphisms().all(|h| {
                    let (a, b) = (shape.dom(h), shape.cod(h));
                    base.comp(y.on_morphisms[h.0], components[a.0])
                        == base.comp(components[b.0], x.on_morphisms[h.0])
                });
                if natural {
                    transformations.push(NatTrans {
                        source: ObjId(xi),
                        target: ObjId(yi),
                        components,
                    });
                }
            }
        }
    }

    let thin = base.is_thin();
    let trans_name = |t: &NatTrans| {
        let mut s = String::new();
        if !thin {
            let _ = write!(s, "{}=>{}", names[t.source.0], names[t.target.0]);
        }
        s.push('[');
        for (i, c) in t.components.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(base.morphism_name(*c));
        }
        s.push(']');
        s
    };
    let lookup: HashMap<NatTrans, usize> = transformations
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let trans_names: Vec<String> = transformations.iter().map(trans_name).collect();

    let mut raw = RawCategory {
        objects: names.clone(),
        ..RawCategory::default()
    };
    for (t, name) in transformations.iter().zip(&trans_names) {
        raw.morphisms.push(RawMorphism {
            id: name.clone(),
            dom: names[t.source.0].clone(),
            cod: names[t.target.0].clone(),
        });
    }
    for (xi, x) in fs.iter().enumerate() {
        let id = NatTrans {
            source: ObjId(xi),
            target: ObjId(xi),
            components: x.on_objects.iter().map(|&o| base.identity(o)).collect(),
        };
        raw.identities
            .insert(names[xi].clone(), trans_names[lookup[&id]].clone());
    }
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); fs.len()];
    for (i, t) in transformations.iter().enumerate() {
        outgoing[t.source.0].push(i);
    }
    for (i, f) in transformations.iter().enumerate() {
        for &j in &outgoing[f.target.0] {
            let g = &transformations[j];
            let composite = NatTrans {
                source: f.source,
                target: g.target,
                components: f
                    .components
                    .iter()
                    .zip(&g.components)
                    .map(|(&cf, &cg)| base.comp(cg, cf))
                    .collect(),
            };
            raw.composition.push([
                trans_names[j].clone(),
                trans_names[i].clone(),
                trans_names[lookup[&composite]].clone(),
            ]);
        }
    }
    let total = validate_category(&raw)?;

    // Re-index the tables in the total category's sorted order.
    let mut functors_sorted = vec![None; fs.len()];
    let mut old_to_new = vec![ObjId(0); fs.len()];
    for (i, f) in fs.into_iter().enumerate() {
        let id = total.find_object(&names[i]).expect("functor name present");
        old_to_new[i] = id;
        functors_sorted[id.0] = Some(f);
    }
    let mut trans_sorted = vec![None; transformations.len()];
    for (i, mut t) in transformations.into_iter().enumerate() {
        let id = total.find_morphism(&trans_names[i]).expect("transformation name present");
        t.source = old_to_new[t.source.0];
        t.target = old_to_new[t.target.0];
        trans_sorted[id.0] = Some(t);
    }
    let functors: Vec<Functor> = functors_sorted.into_iter().map(Option::unwrap).collect();
    let transformations: Vec<NatTrans> = trans_sorted.into_iter().map(Option::unwrap).collect();
    let functor_lookup = functors
        .iter()
        .enumerate()
        .map(|(i, f)| (f.clone(), ObjId(i)))
        .collect();
    let transformation_lookup = transformations
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), MorId(i)))
        .collect();

    Ok(DiagramIndex {
        base,
        shape,
        total: Arc::new(total),
        functors,
        transformations,
        functor_lookup,
        transformation_lookup,
    })
}

impl DiagramIndex {
    pub fn base(&self) -> &FiniteCategory {
        &self.base
    }

    pub fn shape(&self) -> &FiniteCategory {
        &self.shape
    }

    /// `M^C` itself.
    pub fn total(&self) -> &FiniteCategory {
        &self.total
    }

    pub fn base_arc(&self) -> Arc<FiniteCategory> {
        Arc::clone(&self.base)
    }

    pub fn total_arc(&self) -> Arc<FiniteCategory> {
        Arc::clone(&self.total)
    }

    pub fn functor(&self, x: ObjId) -> &Functor {
        &self.functors[x.0]
    }

    pub fn transformation(&self, phi: MorId) -> &NatTrans {
        &self.transformations[phi.0]
    }

    pub fn find_functor(&self, f: &Functor) -> Option<ObjId> {
        self.functor_lookup.get(f).copied()
    }

    pub fn find_transformation(&self, t: &NatTrans) -> Option<MorId> {
        self.transformation_lookup.get(t).copied()
    }

    /// The morphism of `M^C` with the given source, target and components.
    pub fn from_components(&self, source: ObjId, target: ObjId, components: Vec<MorId>) -> Option<MorId> {
        self.find_transformation(&NatTrans {
            source,
            target,
            components,
        })
    }

    /// `f(α)`: the component of `phi` at shape object `alpha`.
    pub fn component_of(&self, phi: MorId, alpha: ObjId) -> Result<MorId, IndexError> {
        let t = self
            .transformations
            .get(phi.0)
            .ok_or(IndexError::UnknownMorphism(phi.0))?;
        t.components
            .get(alpha.0)
            .copied()
            .ok_or(IndexError::UnknownShapeObject(alpha.0))
    }

    /// `X(α)`.
    pub fn evaluate(&self, x: ObjId, alpha: ObjId) -> ObjId {
        self.functors[x.0].on_objects[alpha.0]
    }

    /// The constant diagram at `a`.
    pub fn pointed_diagram(&self, a: ObjId) -> Result<ObjId, IndexError> {
        if a.0 >= self.base.num_objects() {
            return Err(IndexError::UnknownBaseObject(a.0));
        }
        let constant = Functor {
            on_objects: vec![a; self.shape.num_objects()],
            on_morphisms: vec![self.base.identity(a); self.shape.num_morphisms()],
        };
        self.find_functor(&constant)
            .ok_or_else(|| IndexError::MissingConstant(self.base.object_name(a).to_string()))
    }

    /// The pointed map `P(f)`, every component equal to `f`.
    pub fn pointed_map(&self, f: MorId) -> Result<MorId, IndexError> {
        if f.0 >= self.base.num_morphisms() {
            return Err(IndexError::UnknownBaseMorphism(f.0));
        }
        let source = self.pointed_diagram(self.base.dom(f))?;
        let target = self.pointed_diagram(self.base.cod(f))?;
        self.from_components(source, target, vec![f; self.shape.num_objects()])
            .ok_or_else(|| IndexError::MissingConstant(self.base.morphism_name(f).to_string()))
    }

    /// Objects of the form `P(A)`, in index order.
    pub fn pointed_objects(&self) -> Vec<ObjId> {
        let mut out: Vec<ObjId> = self
            .base
            .objects()
            .filter_map(|a| self.pointed_diagram(a).ok())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Checks every table invariant: stored functors are functors, stored
    /// transformations are natural, composition is componentwise.
    pub fn check_invariants(&self) -> Result<(), String> {
        let (base, shape, total) = (&*self.base, &*self.shape, &*self.total);
        for x in total.objects() {
            let f = self.functor(x);
            for h in shape.morphisms() {
                let img = f.on_morphisms[h.0];
                if base.dom(img) != f.on_objects[shape.dom(h).0]
                    || base.cod(img) != f.on_objects[shape.cod(h).0]
                {
                    return Err(format!("{}: image of a shape morphism has wrong endpoints", total.object_name(x)));
                }
                if shape.is_identity(h) && !base.is_identity(img) {
                    return Err(format!("{}: identity not preserved", total.object_name(x)));
                }
                for &h2 in shape.outgoing(shape.cod(h)) {
                    if base.comp(f.on_morphisms[h2.0], img) != f.on_morphisms[shape.comp(h2, h).0] {
                        return Err(format!("{}: composition not preserved", total.object_name(x)));
                    }
                }
            }
        }
        for phi in total.morphisms() {
            let t = self.transformation(phi);
            if total.dom(phi) != t.source || total.cod(phi) != t.target {
                return Err(format!("{}: table endpoints disagree", total.morphism_name(phi)));
            }
            let (x, y) = (self.functor(t.source), self.functor(t.target));
            for h in shape.morphisms() {
                let (a, b) = (shape.dom(h), shape.cod(h));
                if base.comp(y.on_morphisms[h.0], t.components[a.0])
                    != base.comp(t.components[b.0], x.on_morphisms[h.0])
                {
                    return Err(format!("{}: naturality square fails", total.morphism_name(phi)));
                }
            }
            for &psi in total.outgoing(total.cod(phi)) {
                let composite = self.transformation(total.comp(psi, phi));
                let expected: Vec<MorId> = shape
                    .objects()
                    .map(|a| base.comp(self.transformation(psi).components[a.0], t.components[a.0]))
                    .collect();
                if composite.components != expected {
                    return Err(format!(
                        "composite of {} and {} is not componentwise",
                        total.morphism_name(psi),
                        total.morphism_name(phi)
                    ));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn index(base: FiniteCategory, shape: FiniteCategory) -> DiagramIndex {
        functor_category(Arc::new(base), Arc::new(shape), DEFAULT_OBJECT_CAP).unwrap()
    }

    #[test]
    fn arrow_category_of_one_arrow_is_three_chain() {
        let idx = index(catalog::chain(1), catalog::chain(1));
        let total = idx.total();
        assert_eq!(total.num_objects(), 3);
        assert_eq!(total.num_morphisms(), 6);
        assert!(total.is_thin());
        let names: Vec<&str> = total.objects().map(|x| total.object_name(x)).collect();
        assert_eq!(names, vec!["(0,0)", "(0,1)", "(1,1)"]);
        // Linear order const0 < id < const1: hom-sets nonempty exactly upward.
        for a in total.objects() {
            for b in total.objects() {
                assert_eq!(total.hom(a, b).len(), usize::from(a <= b));
            }
        }
        idx.check_invariants().unwrap();
    }

    #[test]
    fn terminal_shape_gives_base() {
        let base = catalog::diamond();
        let idx = index(base.clone(), catalog::terminal());
        let total = idx.total();
        assert_eq!(total.num_objects(), base.num_objects());
        assert_eq!(total.num_morphisms(), base.num_morphisms());
        // Evaluation is a bijection compatible with composition.
        let eval = |phi: MorId| idx.component_of(phi, ObjId(0)).unwrap();
        let mut seen: Vec<MorId> = total.morphisms().map(eval).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), base.num_morphisms());
        for f in total.morphisms() {
            for &g in total.outgoing(total.cod(f)) {
                assert_eq!(eval(total.comp(g, f)), base.comp(eval(g), eval(f)));
            }
        }
    }

    #[test]
    fn terminal_base_gives_terminal() {
        let idx = index(catalog::terminal(), catalog::chain(2));
        assert_eq!(idx.total().num_objects(), 1);
        assert_eq!(idx.total().num_morphisms(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let err = functor_category(Arc::new(catalog::diamond()), Arc::new(catalog::chain(2)), 63)
            .unwrap_err();
        assert_eq!(err, CategoryError::CapExceeded { needed: 64, cap: 63 });
    }

    #[test]
    fn pointed_diagrams_and_components() {
        let idx = index(catalog::chain(1), catalog::chain(1));
        let base = idx.base();
        let o0 = base.find_object("0").unwrap();
        let p0 = idx.pointed_diagram(o0).unwrap();
        assert_eq!(idx.total().object_name(p0), "(0,0)");

        let id0 = base.find_morphism("id_0").unwrap();
        assert_eq!(idx.pointed_map(id0).unwrap(), idx.total().identity(p0));

        let f = base.find_morphism("0->1").unwrap();
        let pf = idx.pointed_map(f).unwrap();
        assert_eq!(idx.total().morphism_name(pf), "[0->1,0->1]");
        for a in idx.shape().objects() {
            assert_eq!(idx.component_of(pf, a).unwrap(), f);
        }

        // const0 -> id has components id_0 at 0 and the arrow at 1.
        let total = idx.total();
        let x = total.find_object("(0,0)").unwrap();
        let y = total.find_object("(0,1)").unwrap();
        let phi = total.hom(x, y)[0];
        assert_eq!(idx.component_of(phi, ObjId(0)).unwrap(), id0);
        assert_eq!(idx.component_of(phi, ObjId(1)).unwrap(), f);
        assert_eq!(idx.component_of(phi, ObjId(2)), Err(IndexError::UnknownShapeObject(2)));
        assert_eq!(idx.component_of(MorId(99), ObjId(0)), Err(IndexError::UnknownMorphism(99)));
    }

    #[test]
    fn non_thin_base() {
        // Two parallel arrows u, v: 0 -> 1; diagrams of shape [1] are the
        // three identities-or-arrows choices per object pair.
        let raw = RawCategory {
            objects: vec!["0".into(), "1".into()],
            morphisms: vec![
                RawMorphism { id: "u".into(), dom: "0".into(), cod: "1".into() },
                RawMorphism { id: "v".into(), dom: "0".into(), cod: "1".into() },
            ],
            ..RawCategory::default()
        };
        let base = validate_category(&raw).unwrap();
        let idx = index(base, catalog::chain(1));
        // functors [1] -> M: (0,0), (1,1), (0,1|u), (0,1|v)
        assert_eq!(idx.total().num_objects(), 4);
        idx.check_invariants().unwrap();
    }

    #[test]
    fn invariants_hold_on_test_grid() {
        for base in [catalog::chain(1), catalog::chain(2), catalog::diamond()] {
            for shape in [catalog::terminal(), catalog::chain(1), catalog::discrete(2)] {
                index(base.clone(), shape).check_invariants().unwrap();
            }
        }
    }
}
