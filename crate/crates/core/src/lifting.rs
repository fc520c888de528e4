//! Lifting problems, orthogonal complements and closure operators.
//!
//! `l ⧄ r` holds when every commuting square from `l` to `r` has a diagonal
//! filler. The full `|Mor| x |Mor|` relation is computed once per category
//! and cached; complements are then intersections of its rows or columns.

use rayon::prelude::*;
use thiserror::Error;

use crate::class::MorphismClass;
use crate::fincat::{FiniteCategory, MorId};

/// A commuting square `r ∘ top = bottom ∘ l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Square {
    /// `dom l -> dom r`
    pub top: MorId,
    /// `cod l -> cod r`
    pub bottom: MorId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftingError {
    #[error("pushout of `{generator}` along `{along}` does not exist")]
    MissingPushout {
        generator: String,
        along: String,
        generator_id: MorId,
        along_id: MorId,
    },
}

#[derive(Clone, Debug)]
pub(crate) struct LiftTable {
    /// `right[l] = {l}^⧄`
    right: Vec<MorphismClass>,
    /// `left[r] = ⧄{r}`
    left: Vec<MorphismClass>,
}

#[derive(Clone, Debug)]
pub(crate) struct RetractTable {
    /// `retracts[g]` = every `f` that is a retract of `g`.
    retracts: Vec<MorphismClass>,
}

/// All commuting squares from `l` to `r`, in index order of `(top, bottom)`.
pub fn squares(cat: &FiniteCategory, l: MorId, r: MorId) -> Vec<Square> {
    let mut out = Vec::new();
    for &top in cat.hom(cat.dom(l), cat.dom(r)) {
        let rt = cat.comp(r, top);
        for &bottom in cat.hom(cat.cod(l), cat.cod(r)) {
            if cat.comp(bottom, l) == rt {
                out.push(Square { top, bottom });
            }
        }
    }
    out
}

/// First diagonal `d` with `d ∘ l = top` and `r ∘ d = bottom`.
pub fn diagonal(cat: &FiniteCategory, l: MorId, r: MorId, square: Square) -> Option<MorId> {
    cat.hom(cat.cod(l), cat.dom(r))
        .iter()
        .copied()
        .find(|&d| cat.comp(d, l) == square.top && cat.comp(r, d) == square.bottom)
}

/// First square from `l` to `r` with no diagonal, by direct enumeration.
pub fn unliftable_square(cat: &FiniteCategory, l: MorId, r: MorId) -> Option<Square> {
    squares(cat, l, r)
        .into_iter()
        .find(|&sq| diagonal(cat, l, r, sq).is_none())
}

fn lift_table(cat: &FiniteCategory) -> &LiftTable {
    cat.lift_cache.get_or_init(|| {
        let n = cat.num_morphisms();
        let right: Vec<MorphismClass> = (0..n)
            .into_par_iter()
            .map(|l| MorphismClass::from_fn(n, |r| unliftable_square(cat, MorId(l), r).is_none()))
            .collect();
        let left = (0..n)
            .map(|r| MorphismClass::from_fn(n, |l| right[l.0].contains(MorId(r))))
            .collect();
        LiftTable { right, left }
    })
}

fn retract_table(cat: &FiniteCategory) -> &RetractTable {
    cat.retract_cache.get_or_init(|| {
        let n = cat.num_morphisms();
        let retracts = (0..n)
            .into_par_iter()
            .map(|g| MorphismClass::from_fn(n, |f| cat.is_retract(f, MorId(g))))
            .collect();
        RetractTable { retracts }
    })
}

/// Whether `l` has the left lifting property against `r`.
pub fn lift_exists(cat: &FiniteCategory, l: MorId, r: MorId) -> bool {
    lift_table(cat).right[l.0].contains(r)
}

/// `L^⧄`: every morphism with the right lifting property against all of `L`.
pub fn right_complement(cat: &FiniteCategory, left: &MorphismClass) -> MorphismClass {
    let table = lift_table(cat);
    let mut out = cat.all();
    for l in left.iter() {
        out.intersect_with(&table.right[l.0]);
    }
    out
}

/// `⧄R`: every morphism with the left lifting property against all of `R`.
pub fn left_complement(cat: &FiniteCategory, right: &MorphismClass) -> MorphismClass {
    let table = lift_table(cat);
    let mut out = cat.all();
    for r in right.iter() {
        out.intersect_with(&table.left[r.0]);
    }
    out
}

/// First pair `(l, r)` in `left x right` without a lift, with the failing square.
pub fn lifting_violation(
    cat: &FiniteCategory,
    left: &MorphismClass,
    right: &MorphismClass,
) -> Option<(MorId, MorId, Square)> {
    let table = lift_table(cat);
    for l in left.iter() {
        if let Some(r) = right.first_outside(&table.right[l.0]) {
            let square = unliftable_square(cat, l, r).expect("table and enumeration agree");
            return Some((l, r, square));
        }
    }
    None
}

/// Every morphism that is a retract of `g`.
pub fn retracts_of(cat: &FiniteCategory, g: MorId) -> &MorphismClass {
    &retract_table(cat).retracts[g.0]
}

/// First `(member, retract)` with `retract ∉ class` a retract of `member ∈ class`.
pub fn retract_violation(cat: &FiniteCategory, class: &MorphismClass) -> Option<(MorId, MorId)> {
    class
        .iter()
        .find_map(|g| retracts_of(cat, g).first_outside(class).map(|f| (g, f)))
}

/// Smallest superclass closed under retracts.
pub fn retract_closure(cat: &FiniteCategory, class: &MorphismClass) -> MorphismClass {
    let mut out = class.clone();
    loop {
        let mut next = out.clone();
        for g in out.iter() {
            next.union_with(retracts_of(cat, g));
        }
        if next == out {
            return out;
        }
        out = next;
    }
}

/// First composable `(f, g)` in the class whose composite `g ∘ f` is not.
pub fn composition_violation(cat: &FiniteCategory, class: &MorphismClass) -> Option<(MorId, MorId)> {
    for f in class.iter() {
        for &g in cat.outgoing(cat.cod(f)) {
            if class.contains(g) && !class.contains(cat.comp(g, f)) {
                return Some((f, g));
            }
        }
    }
    None
}

/// Smallest superclass closed under binary composition.
pub fn composition_closure(cat: &FiniteCategory, class: &MorphismClass) -> MorphismClass {
    let mut out = class.clone();
    loop {
        let mut next = out.clone();
        for f in out.iter() {
            for &g in cat.outgoing(cat.cod(f)) {
                if out.contains(g) {
                    next.insert(cat.comp(g, f));
                }
            }
        }
        if next == out {
            return out;
        }
        out = next;
    }
}

/// Finite-scale `I`-cell: least class containing the identities and every
/// pushout of a member of `I` along any map out of its domain, closed under
/// composition. Chains of composites stabilize in a finite category, so this
/// fixed point is the whole transfinite construction.
pub fn cell_closure(cat: &FiniteCategory, generators: &MorphismClass) -> Result<MorphismClass, LiftingError> {
    let mut out = cat.identities();
    for i in generators.iter() {
        for &g in cat.outgoing(cat.dom(i)) {
            let po = cat.pushout(i, g).ok_or_else(|| LiftingError::MissingPushout {
                generator: cat.morphism_name(i).to_string(),
                along: cat.morphism_name(g).to_string(),
                generator_id: i,
                along_id: g,
            })?;
            out.insert(po.second_leg);
        }
    }
    Ok(composition_closure(cat, &out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn names(cat: &FiniteCategory, class: &MorphismClass) -> Vec<String> {
        cat.class_names(class)
    }

    #[test]
    fn identity_squares_are_endomorphism_pairs() {
        let d = catalog::diamond();
        for x in d.objects() {
            let id = d.identity(x);
            let sq = squares(&d, id, id);
            let endos = d.hom(x, x);
            assert_eq!(sq.len(), endos.len());
            for (s, &t) in sq.iter().zip(endos) {
                assert_eq!((s.top, s.bottom), (t, t));
            }
        }
    }

    #[test]
    fn walking_arrow_against_itself() {
        let one = catalog::chain(1);
        let f = one.find_morphism("0->1").unwrap();
        let id0 = one.find_morphism("id_0").unwrap();
        let id1 = one.find_morphism("id_1").unwrap();
        // top ∈ Hom(0,0) = {id0}, bottom ∈ Hom(1,1) = {id1}; no diagonal 1 -> 0.
        assert_eq!(squares(&one, f, f), vec![Square { top: id0, bottom: id1 }]);
        assert!(!lift_exists(&one, f, f));
        assert_eq!(unliftable_square(&one, f, f), Some(Square { top: id0, bottom: id1 }));
    }

    #[test]
    fn empty_square_set() {
        // From 1->? into 0: no top map from dom(id_1) = 1 to dom(id_0) = 0.
        let one = catalog::chain(1);
        let id0 = one.find_morphism("id_0").unwrap();
        let id1 = one.find_morphism("id_1").unwrap();
        assert!(squares(&one, id1, id0).is_empty());
        assert!(lift_exists(&one, id1, id0));
    }

    #[test]
    fn identities_lift_against_everything() {
        for cat in catalog::test_lattices() {
            for x in cat.objects() {
                for r in cat.morphisms() {
                    assert!(lift_exists(&cat, cat.identity(x), r));
                    assert!(lift_exists(&cat, r, cat.identity(x)));
                }
            }
        }
    }

    #[test]
    fn complements_on_walking_arrow() {
        let one = catalog::chain(1);
        let all = one.all();
        let f = one.class_from_names(&["0->1"]).unwrap();
        assert_eq!(right_complement(&one, &one.none()), all);
        assert_eq!(left_complement(&one, &one.none()), all);
        assert_eq!(right_complement(&one, &one.identities()), all);
        assert_eq!(names(&one, &right_complement(&one, &f)), vec!["id_0", "id_1"]);
        assert_eq!(names(&one, &left_complement(&one, &f)), vec!["id_0", "id_1"]);
    }

    #[test]
    fn left_complement_of_everything_is_isomorphisms_on_posets() {
        for cat in catalog::test_lattices() {
            assert_eq!(left_complement(&cat, &cat.all()), cat.isomorphisms());
            assert_eq!(right_complement(&cat, &cat.all()), cat.isomorphisms());
        }
    }

    #[test]
    fn retract_closure_examples() {
        let d = catalog::diamond();
        assert_eq!(retract_closure(&d, &d.all()), d.all());
        assert_eq!(retract_closure(&d, &d.none()), d.none());
        // In a poset r∘i = id forces i, r to be identities, so the only
        // retract of a morphism is itself.
        let closure = retract_closure(&d, &d.class_from_names(&["bot->a"]).unwrap());
        assert_eq!(names(&d, &closure), vec!["bot->a"]);
    }

    #[test]
    fn cell_closure_examples() {
        let one = catalog::chain(1);
        assert_eq!(cell_closure(&one, &one.none()).unwrap(), one.identities());
        let f = one.class_from_names(&["0->1"]).unwrap();
        assert_eq!(cell_closure(&one, &f).unwrap(), one.all());

        let d = catalog::diamond();
        let gen = d.class_from_names(&["bot->a"]).unwrap();
        let cell = cell_closure(&d, &gen).unwrap();
        assert_eq!(
            names(&d, &cell),
            vec!["b->top", "bot->a", "id_a", "id_b", "id_bot", "id_top"]
        );
    }

    #[test]
    fn cell_closure_reports_missing_pushout() {
        let p = crate::fincat::poset_category(
            &["0", "1", "2", "3", "4"],
            &[("0", "1"), ("0", "2"), ("1", "3"), ("2", "3"), ("1", "4"), ("2", "4")],
        )
        .unwrap();
        let gen = p.class_from_names(&["0->1"]).unwrap();
        let err = cell_closure(&p, &gen).unwrap_err();
        assert!(matches!(err, LiftingError::MissingPushout { ref along, .. } if along == "0->2"));
    }

    #[test]
    fn cached_table_matches_direct_enumeration() {
        for cat in catalog::test_lattices() {
            for l in cat.morphisms() {
                for r in cat.morphisms() {
                    assert_eq!(lift_exists(&cat, l, r), unliftable_square(&cat, l, r).is_none());
                }
            }
        }
    }
}
