//! Binary relations on a finite semigroup and the DSC property.

mod axioms;
mod closure;
mod dsc;
mod witness;

use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use axioms::{axiom_report, is_congruence, AxiomReport};
pub use closure::{all_congruences, congruence_generated, diagonal_closure};
pub use dsc::{brute_force_is_dsc, is_dsc_fast, DscScan, MAX_BRUTE_FORCE_ORDER};
pub use witness::{witness_non_dsc, NonDscWitness, Strategy};

use crate::finite::Element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationsError {
    #[error("order {n} exceeds the supported maximum {max} for an exhaustive scan")]
    TooLarge { n: usize, max: usize },
    #[error("the semigroup is a group, so every diagonal subsemigroup is a congruence")]
    IsGroup,
    #[error("constructed witness failed verification: {0}")]
    WitnessRejected(String),
}

/// A set of ordered pairs over the elements `0..order` of a finite
/// semigroup, stored as an `order × order` bit matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairSet {
    order: usize,
    bits: FixedBitSet,
}

impl PairSet {
    pub fn empty(order: usize) -> Self {
        PairSet {
            order,
            bits: FixedBitSet::with_capacity(order * order),
        }
    }

    /// `Δ = {(x, x)}`.
    pub fn diagonal(order: usize) -> Self {
        let mut set = Self::empty(order);
        for x in 0..order {
            set.insert(x, x);
        }
        set
    }

    pub fn full(order: usize) -> Self {
        let mut set = Self::empty(order);
        set.bits.insert_range(..);
        set
    }

    pub fn from_pairs(order: usize, pairs: impl IntoIterator<Item = (Element, Element)>) -> Self {
        let mut set = Self::empty(order);
        for (x, y) in pairs {
            set.insert(x, y);
        }
        set
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn slot(&self, x: Element, y: Element) -> usize {
        assert!(
            x < self.order && y < self.order,
            "pair ({x},{y}) out of range"
        );
        x * self.order + y
    }

    #[inline]
    pub fn contains(&self, x: Element, y: Element) -> bool {
        self.bits.contains(self.slot(x, y))
    }

    /// Returns true if the pair was newly added.
    pub fn insert(&mut self, x: Element, y: Element) -> bool {
        let slot = self.slot(x, y);
        !self.bits.put(slot)
    }

    pub fn remove(&mut self, x: Element, y: Element) {
        let slot = self.slot(x, y);
        self.bits.set(slot, false);
    }

    pub fn toggle(&mut self, x: Element, y: Element) {
        let slot = self.slot(x, y);
        self.bits.toggle(slot);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Pairs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.bits
            .ones()
            .map(move |i| (i / self.order, i % self.order))
    }

    pub fn pairs(&self) -> Vec<(Element, Element)> {
        self.iter().collect()
    }

    /// `{y : (x, y) ∈ ρ}`.
    pub fn row(&self, x: Element) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order);
        for y in 0..self.order {
            if self.contains(x, y) {
                out.insert(y);
            }
        }
        out
    }

    pub fn is_subset(&self, other: &PairSet) -> bool {
        self.order == other.order && self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &PairSet) {
        assert_eq!(self.order, other.order, "pair sets over different orders");
        self.bits.union_with(&other.bits);
    }

    /// `{(y, x) : (x, y) ∈ ρ}`.
    pub fn reversed(&self) -> PairSet {
        PairSet::from_pairs(self.order, self.iter().map(|(x, y)| (y, x)))
    }
}

impl fmt::Debug for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_operations() {
        let mut rho = PairSet::diagonal(3);
        assert_eq!(rho.len(), 3);
        assert!(rho.insert(0, 2));
        assert!(!rho.insert(0, 2));
        assert!(rho.contains(0, 2) && !rho.contains(2, 0));
        assert_eq!(rho.reversed().pairs(), vec![(0, 0), (1, 1), (2, 0), (2, 2)]);
        assert!(PairSet::diagonal(3).is_subset(&rho));
        rho.remove(0, 2);
        assert_eq!(rho, PairSet::diagonal(3));
        assert_eq!(PairSet::full(2).len(), 4);
    }
}
