use std::collections::BTreeMap;

use serde::Serialize;

use super::apset::{APSet, Progression};
use super::coinjection::CoInjection;

/// `(f, g) ∈ ρ` iff the image complements of `f` and `g` meet.
pub fn baer_levi_related(f: &CoInjection, g: &CoInjection) -> bool {
    !f.complement().intersect(g.complement()).is_empty()
}

#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub pair: String,
    pub intersection: APSet,
    pub related: bool,
}

/// Three injections of `ℕ` showing that `ρ` is not transitive.
///
/// With `A′ = {n ≡ 0 mod 4}`, `B′ = {n ≡ 1 mod 4}` and `x = 4`, the maps
/// have complements `A′`, `B′ ∪ {4}` and `B′`.
#[derive(Debug, Clone, Serialize)]
pub struct BaerLeviWitness {
    pub f: CoInjection,
    pub g: CoInjection,
    pub h: CoInjection,
    pub pairs: Vec<PairReport>,
}

impl BaerLeviWitness {
    /// Membership of `(f,g)`, `(g,h)`, `(f,h)`.
    pub fn pattern(&self) -> (bool, bool, bool) {
        (
            self.pairs[0].related,
            self.pairs[1].related,
            self.pairs[2].related,
        )
    }
}

fn shifted_by_quarters(offsets: [u64; 3], patches: BTreeMap<u64, u64>) -> CoInjection {
    let pieces = offsets.iter().map(|&b| (4, b)).collect();
    CoInjection::new(3, pieces, patches).expect("fixed witness map is injective")
}

/// `3q + r ↦ 4q + [1,2,3][r]`, missing `{n ≡ 0 mod 4}`.
pub fn witness_f() -> CoInjection {
    shifted_by_quarters([1, 2, 3], BTreeMap::new())
}

/// `h` advanced by one source step, with the first three points patched
/// back so that only `4` joins the complement.
pub fn witness_g() -> CoInjection {
    shifted_by_quarters([2, 3, 4], [(0, 0), (1, 2), (2, 3)].into_iter().collect())
}

/// `3q + r ↦ 4q + [0,2,3][r]`, missing `{n ≡ 1 mod 4}`.
pub fn witness_h() -> CoInjection {
    shifted_by_quarters([0, 2, 3], BTreeMap::new())
}

pub fn baer_levi_witness() -> BaerLeviWitness {
    let (f, g, h) = (witness_f(), witness_g(), witness_h());
    let pairs = [("(f,g)", &f, &g), ("(g,h)", &g, &h), ("(f,h)", &f, &h)]
        .into_iter()
        .map(|(name, x, y)| PairReport {
            pair: name.to_string(),
            intersection: x.complement().intersect(y.complement()),
            related: baer_levi_related(x, y),
        })
        .collect();
    BaerLeviWitness { f, g, h, pairs }
}

/// `B′ ⊆ X ∖ Xg ∩ X ∖ Xh`.
pub fn shares_b_prime(report: &PairReport) -> bool {
    report
        .intersection
        .contains_progression(&Progression::new(4, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complements() {
        let w = baer_levi_witness();
        assert_eq!(w.f.complement(), &APSet::progression(4, 0));
        assert_eq!(
            w.g.complement(),
            &APSet::progression(4, 1).union(&APSet::points([4]))
        );
        assert_eq!(w.h.complement(), &APSet::progression(4, 1));
        for map in [&w.f, &w.g, &w.h] {
            assert!(map.in_baer_levi());
            map.validate(5000).unwrap();
        }
    }

    #[test]
    fn membership_pattern() {
        let w = baer_levi_witness();
        assert_eq!(w.pattern(), (true, true, false));
        assert_eq!(w.pairs[0].intersection, APSet::points([4]));
        assert!(shares_b_prime(&w.pairs[1]));
        assert!(w.pairs[2].intersection.is_empty());
    }
}
