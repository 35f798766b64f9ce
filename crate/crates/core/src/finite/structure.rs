use super::greens::two_sided_ideal;
use super::{Element, FiniteError, FiniteSemigroup};
use crate::relations::PairSet;

/// The principal two-sided ideal `S¹ x S¹`, as increasing indices.
pub fn principal_ideal(s: &FiniteSemigroup, x: Element) -> Vec<Element> {
    two_sided_ideal(s, x).ones().collect()
}

/// True iff `S` has no ideal other than itself, i.e. a single J-class.
pub fn is_simple(s: &FiniteSemigroup) -> bool {
    s.elements()
        .all(|x| two_sided_ideal(s, x).count_ones(..) == s.order())
}

/// A proper two-sided ideal when `S` is not simple: the smallest principal
/// ideal, ties broken by the smallest generator index.
pub fn proper_ideal(s: &FiniteSemigroup) -> Option<Vec<Element>> {
    let (_, ideal) = s
        .elements()
        .map(|x| two_sided_ideal(s, x))
        .enumerate()
        .min_by_key(|(x, ideal)| (ideal.count_ones(..), *x))?;
    (ideal.count_ones(..) < s.order()).then(|| ideal.ones().collect())
}

pub fn idempotents(s: &FiniteSemigroup) -> Vec<Element> {
    s.elements().filter(|&x| s.is_idempotent(x)).collect()
}

/// A two-sided identity exists and every row and column of the table is a
/// permutation.
pub fn is_group(s: &FiniteSemigroup) -> bool {
    if s.identity().is_none() {
        return false;
    }
    let n = s.order();
    let mut seen = vec![false; n];
    let is_perm = |seen: &mut Vec<bool>, it: &mut dyn Iterator<Item = Element>| {
        seen.iter_mut().for_each(|b| *b = false);
        for v in it {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        true
    };
    s.elements().all(|x| {
        is_perm(&mut seen, &mut s.elements().map(|y| s.mul(x, y)))
            && is_perm(&mut seen, &mut s.elements().map(|y| s.mul(y, x)))
    })
}

/// Simple, with an idempotent that is minimal under `e ≤ f ⟺ ef = fe = e`.
pub fn is_completely_simple(s: &FiniteSemigroup) -> bool {
    if !is_simple(s) {
        return false;
    }
    let es = idempotents(s);
    es.iter().any(|&e| {
        es.iter()
            .all(|&f| f == e || !(s.mul(f, e) == f && s.mul(e, f) == f))
    })
}

/// All `t` with `sts = s` and `tst = t`.
pub fn semigroup_inverses(s: &FiniteSemigroup, x: Element) -> Vec<Element> {
    s.elements()
        .filter(|&t| s.mul(s.mul(x, t), x) == x && s.mul(s.mul(t, x), t) == t)
        .collect()
}

/// Every element has exactly one semigroup inverse.
pub fn is_inverse(s: &FiniteSemigroup) -> bool {
    s.elements().all(|x| semigroup_inverses(s, x).len() == 1)
}

/// `{(x, y) : x = e·y for some idempotent e}` on an inverse semigroup.
pub fn natural_partial_order(s: &FiniteSemigroup) -> Result<PairSet, FiniteError> {
    if !is_inverse(s) {
        return Err(FiniteError::NotInverse);
    }
    let mut order = PairSet::empty(s.order());
    for e in idempotents(s) {
        for y in s.elements() {
            order.insert(s.mul(e, y), y);
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{cyclic_group, left_zero, min_semilattice, right_zero};

    #[test]
    fn simplicity() {
        assert!(is_simple(&left_zero(2)));
        assert!(is_simple(&cyclic_group(3)));
        assert!(!is_simple(&min_semilattice()));
        assert_eq!(proper_ideal(&min_semilattice()), Some(vec![0]));
        assert_eq!(proper_ideal(&cyclic_group(3)), None);
    }

    #[test]
    fn predicates_on_c2() {
        let c2 = cyclic_group(2);
        assert!(is_group(&c2));
        assert!(is_completely_simple(&c2));
        assert!(is_inverse(&c2));
    }

    #[test]
    fn predicates_on_left_zero() {
        let lz = left_zero(2);
        assert!(!is_group(&lz));
        assert!(is_completely_simple(&lz));
        assert!(!is_inverse(&lz));
        assert_eq!(semigroup_inverses(&lz, 0), vec![0, 1]);
        assert!(!is_group(&right_zero(3)));
    }

    #[test]
    fn predicates_on_semilattice() {
        let sl = min_semilattice();
        assert!(!is_group(&sl));
        assert!(!is_completely_simple(&sl));
        assert!(is_inverse(&sl));
        assert_eq!(idempotents(&sl), vec![0, 1]);
    }

    #[test]
    fn natural_order_of_semilattice() {
        let order = natural_partial_order(&min_semilattice()).unwrap();
        assert_eq!(order.pairs(), vec![(0, 0), (0, 1), (1, 1)]);
    }

    #[test]
    fn natural_order_of_group_is_diagonal() {
        let c4 = cyclic_group(4);
        assert_eq!(natural_partial_order(&c4).unwrap(), PairSet::diagonal(4));
    }

    #[test]
    fn natural_order_requires_inverse() {
        assert_eq!(
            natural_partial_order(&left_zero(2)).unwrap_err(),
            FiniteError::NotInverse
        );
    }

    #[test]
    fn identity_need_not_be_index_zero() {
        let c3 = cyclic_group(3).relabel(&[1, 2, 0]);
        assert!(is_group(&c3));
    }
}
