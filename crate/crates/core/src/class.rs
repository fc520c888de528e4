//! Morphism classes as dense bitsets over a category's morphism order.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::fincat::MorId;

/// A subset of the morphisms of one finite category.
///
/// The universe size is the morphism count of the parent category; every
/// binary operation asserts both operands share it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MorphismClass {
    bits: FixedBitSet,
}

impl MorphismClass {
    pub fn empty(universe: usize) -> Self {
        MorphismClass {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        MorphismClass { bits }
    }

    pub fn from_members<I: IntoIterator<Item = MorId>>(universe: usize, members: I) -> Self {
        let mut class = MorphismClass::empty(universe);
        for m in members {
            class.insert(m);
        }
        class
    }

    /// Builds a class from a membership predicate evaluated on every morphism.
    pub fn from_fn(universe: usize, mut pred: impl FnMut(MorId) -> bool) -> Self {
        MorphismClass::from_members(universe, (0..universe).map(MorId).filter(|&m| pred(m)))
    }

    /// Number of morphisms in the parent category.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.universe()
    }

    pub fn contains(&self, m: MorId) -> bool {
        self.bits.contains(m.0)
    }

    pub fn insert(&mut self, m: MorId) -> bool {
        assert!(m.0 < self.universe(), "morphism {} outside class universe", m.0);
        !self.bits.put(m.0)
    }

    pub fn remove(&mut self, m: MorId) {
        self.bits.set(m.0, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = MorId> + '_ {
        self.bits.ones().map(MorId)
    }

    pub fn members(&self) -> Vec<MorId> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &MorphismClass) {
        assert_eq!(
            self.universe(),
            other.universe(),
            "morphism classes over different categories"
        );
    }

    pub fn union(&self, other: &MorphismClass) -> MorphismClass {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        MorphismClass { bits }
    }

    pub fn intersection(&self, other: &MorphismClass) -> MorphismClass {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        MorphismClass { bits }
    }

    pub fn difference(&self, other: &MorphismClass) -> MorphismClass {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        MorphismClass { bits }
    }

    pub fn complement(&self) -> MorphismClass {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        MorphismClass { bits }
    }

    pub fn symmetric_difference(&self, other: &MorphismClass) -> MorphismClass {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.symmetric_difference_with(&other.bits);
        MorphismClass { bits }
    }

    pub fn union_with(&mut self, other: &MorphismClass) {
        self.check_universe(other);
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &MorphismClass) {
        self.check_universe(other);
        self.bits.intersect_with(&other.bits);
    }

    pub fn is_subset(&self, other: &MorphismClass) -> bool {
        self.check_universe(other);
        self.bits.is_subset(&other.bits)
    }

    /// First member of `self` missing from `other`, in index order.
    pub fn first_outside(&self, other: &MorphismClass) -> Option<MorId> {
        self.difference(other).iter().next()
    }

    /// Membership string, one character per morphism (`1` member, `0` not).
    pub fn bit_string(&self) -> String {
        (0..self.universe())
            .map(|i| if self.bits.contains(i) { '1' } else { '0' })
            .collect()
    }
}

impl Ord for MorphismClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe()
            .cmp(&other.universe())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for MorphismClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MorphismClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|m| m.0)).finish()
    }
}
