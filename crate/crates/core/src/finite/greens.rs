use std::collections::HashMap;
use std::hash::Hash;

use fixedbitset::FixedBitSet;

use super::{Element, FiniteSemigroup};

/// Green's relations of a finite semigroup, each stored as a class id per
/// element. Class ids are assigned in order of first occurrence, so the
/// class of element 0 always has id 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreensData {
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub j_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub d_class: Vec<usize>,
}

impl GreensData {
    pub fn r_count(&self) -> usize {
        class_count(&self.r_class)
    }

    pub fn l_count(&self) -> usize {
        class_count(&self.l_class)
    }

    pub fn j_count(&self) -> usize {
        class_count(&self.j_class)
    }

    /// Members of each class, classes ordered by id, members increasing.
    pub fn classes(ids: &[usize]) -> Vec<Vec<Element>> {
        let mut out = vec![Vec::new(); class_count(ids)];
        for (x, &c) in ids.iter().enumerate() {
            out[c].push(x);
        }
        out
    }
}

fn class_count(ids: &[usize]) -> usize {
    ids.iter().max().map_or(0, |m| m + 1)
}

/// Assigns class ids by equality of `key`, in order of first occurrence.
pub fn partition_classes<K: Eq + Hash>(keys: impl IntoIterator<Item = K>) -> Vec<usize> {
    let mut seen: HashMap<K, usize> = HashMap::new();
    keys.into_iter()
        .map(|k| {
            let next = seen.len();
            *seen.entry(k).or_insert(next)
        })
        .collect()
}

/// `x S¹`.
pub(crate) fn right_ideal(s: &FiniteSemigroup, x: Element) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(s.order());
    set.insert(x);
    for y in s.elements() {
        set.insert(s.mul(x, y));
    }
    set
}

/// `S¹ x`.
pub(crate) fn left_ideal(s: &FiniteSemigroup, x: Element) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(s.order());
    set.insert(x);
    for y in s.elements() {
        set.insert(s.mul(y, x));
    }
    set
}

/// `S¹ x S¹`.
pub(crate) fn two_sided_ideal(s: &FiniteSemigroup, x: Element) -> FixedBitSet {
    let right = right_ideal(s, x);
    let mut set = right.clone();
    for r in right.ones() {
        for y in s.elements() {
            set.insert(s.mul(y, r));
        }
    }
    set
}

/// Computes R, L, J from principal ideals, `H = R ∧ L` and `D = R ∘ L`.
pub fn greens(s: &FiniteSemigroup) -> GreensData {
    let n = s.order();
    let r_class = partition_classes(s.elements().map(|x| right_ideal(s, x)));
    let l_class = partition_classes(s.elements().map(|x| left_ideal(s, x)));
    let j_class = partition_classes(s.elements().map(|x| two_sided_ideal(s, x)));
    let h_class = partition_classes(s.elements().map(|x| (r_class[x], l_class[x])));

    // x D y iff some z has x R z and z L y.
    let d_key = s.elements().map(|x| {
        let mut reach = FixedBitSet::with_capacity(n);
        for z in (0..n).filter(|&z| r_class[z] == r_class[x]) {
            for y in (0..n).filter(|&y| l_class[y] == l_class[z]) {
                reach.insert(y);
            }
        }
        reach
    });
    let d_class = partition_classes(d_key);

    GreensData {
        r_class,
        l_class,
        j_class,
        h_class,
        d_class,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{cyclic_group, left_zero, min_semilattice};

    #[test]
    fn left_zero_classes() {
        let g = greens(&left_zero(2));
        assert_eq!(GreensData::classes(&g.r_class), vec![vec![0], vec![1]]);
        assert_eq!(GreensData::classes(&g.l_class), vec![vec![0, 1]]);
        assert_eq!(g.j_count(), 1);
        assert_eq!(g.d_class, g.j_class);
    }

    #[test]
    fn groups_are_one_class() {
        let g = greens(&cyclic_group(5));
        for ids in [&g.r_class, &g.l_class, &g.j_class, &g.h_class, &g.d_class] {
            assert!(ids.iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn semilattice_classes_are_singletons() {
        let g = greens(&min_semilattice());
        for ids in [&g.r_class, &g.l_class, &g.j_class, &g.h_class, &g.d_class] {
            assert_eq!(ids, &vec![0, 1]);
        }
    }
}
