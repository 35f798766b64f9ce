use serde::Serialize;

use super::PairSet;
use crate::finite::{Element, FiniteSemigroup};

type Pair = (Element, Element);

/// The four congruence axioms, each checked on its own. Violations are the
/// lexicographically first offending element, pair, or pair of pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub contains_diagonal: bool,
    pub is_subsemigroup: bool,
    pub is_symmetric: bool,
    pub is_transitive: bool,
    /// `x` with `(x, x) ∉ ρ`.
    pub diagonal_violation: Option<Element>,
    /// `(p, q)` in ρ whose coordinatewise product is not.
    pub subsemigroup_violation: Option<(Pair, Pair)>,
    /// `(x, y) ∈ ρ` with `(y, x) ∉ ρ`.
    pub symmetric_violation: Option<Pair>,
    /// `(x, y), (y, z) ∈ ρ` with `(x, z) ∉ ρ`.
    pub transitive_violation: Option<(Pair, Pair)>,
}

impl AxiomReport {
    pub fn is_congruence(&self) -> bool {
        self.contains_diagonal && self.is_subsemigroup && self.is_symmetric && self.is_transitive
    }

    pub fn is_diagonal_subsemigroup(&self) -> bool {
        self.contains_diagonal && self.is_subsemigroup
    }
}

pub(crate) fn first_missing_diagonal(rho: &PairSet) -> Option<Element> {
    (0..rho.order()).find(|&x| !rho.contains(x, x))
}

pub(crate) fn first_product_escape(s: &FiniteSemigroup, rho: &PairSet) -> Option<(Pair, Pair)> {
    let pairs = rho.pairs();
    for &(x, y) in &pairs {
        for &(z, t) in &pairs {
            if !rho.contains(s.mul(x, z), s.mul(y, t)) {
                return Some(((x, y), (z, t)));
            }
        }
    }
    None
}

pub(crate) fn first_asymmetry(rho: &PairSet) -> Option<Pair> {
    rho.iter().find(|&(x, y)| !rho.contains(y, x))
}

pub(crate) fn first_intransitivity(rho: &PairSet) -> Option<(Pair, Pair)> {
    let n = rho.order();
    for (x, y) in rho.iter() {
        for z in 0..n {
            if rho.contains(y, z) && !rho.contains(x, z) {
                return Some(((x, y), (y, z)));
            }
        }
    }
    None
}

pub fn axiom_report(s: &FiniteSemigroup, rho: &PairSet) -> AxiomReport {
    assert_eq!(s.order(), rho.order(), "relation over a different order");
    let diagonal_violation = first_missing_diagonal(rho);
    let subsemigroup_violation = first_product_escape(s, rho);
    let symmetric_violation = first_asymmetry(rho);
    let transitive_violation = first_intransitivity(rho);
    AxiomReport {
        contains_diagonal: diagonal_violation.is_none(),
        is_subsemigroup: subsemigroup_violation.is_none(),
        is_symmetric: symmetric_violation.is_none(),
        is_transitive: transitive_violation.is_none(),
        diagonal_violation,
        subsemigroup_violation,
        symmetric_violation,
        transitive_violation,
    }
}

pub fn is_congruence(s: &FiniteSemigroup, rho: &PairSet) -> bool {
    s.order() == rho.order()
        && first_missing_diagonal(rho).is_none()
        && first_asymmetry(rho).is_none()
        && first_intransitivity(rho).is_none()
        && first_product_escape(s, rho).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{cyclic_group, left_zero};

    #[test]
    fn diagonal_and_full_are_congruences() {
        let s = left_zero(3);
        assert!(axiom_report(&s, &PairSet::diagonal(3)).is_congruence());
        assert!(axiom_report(&s, &PairSet::full(3)).is_congruence());
    }

    #[test]
    fn left_zero_example_is_not_symmetric() {
        let s = left_zero(2);
        let rho = PairSet::from_pairs(2, [(0, 0), (0, 1), (1, 1)]);
        let report = axiom_report(&s, &rho);
        assert!(report.contains_diagonal);
        assert!(report.is_subsemigroup);
        assert!(!report.is_symmetric);
        assert_eq!(report.symmetric_violation, Some((0, 1)));
        assert!(report.is_transitive);
        assert!(!report.is_congruence());
    }

    #[test]
    fn violations_are_reported() {
        let c3 = cyclic_group(3);
        let rho = PairSet::from_pairs(3, [(0, 0), (0, 1), (1, 2), (1, 1)]);
        let report = axiom_report(&c3, &rho);
        assert_eq!(report.diagonal_violation, Some(2));
        assert_eq!(report.transitive_violation, Some(((0, 1), (1, 2))));
        assert!(!report.is_subsemigroup);
        assert!(!is_congruence(&c3, &rho));
    }
}
