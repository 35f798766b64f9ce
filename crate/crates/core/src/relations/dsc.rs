use super::axioms::{first_asymmetry, first_intransitivity, first_product_escape};
use super::{PairSet, RelationsError};
use crate::finite::{is_group, Element, FiniteSemigroup};

/// Largest order for which the subset scan is run (`2^(n² − n)` subsets).
pub const MAX_BRUTE_FORCE_ORDER: usize = 4;

/// Outcome of scanning every superset of `Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DscScan {
    pub is_dsc: bool,
    /// The non-congruence diagonal subsemigroup with the lowest off-diagonal
    /// mask, if any.
    pub witness: Option<PairSet>,
    pub diagonal_subsemigroups: usize,
    pub congruences: usize,
}

impl DscScan {
    pub fn non_congruences(&self) -> usize {
        self.diagonal_subsemigroups - self.congruences
    }
}

/// Decides DSC by visiting every set `Δ ∪ X` with `X` a set of
/// off-diagonal pairs. Masks are visited in Gray-code order so consecutive
/// candidates differ by one pair; the reported witness is the failing mask
/// with the smallest value regardless of visiting order.
pub fn brute_force_is_dsc(s: &FiniteSemigroup) -> Result<DscScan, RelationsError> {
    let n = s.order();
    if n > MAX_BRUTE_FORCE_ORDER {
        return Err(RelationsError::TooLarge {
            n,
            max: MAX_BRUTE_FORCE_ORDER,
        });
    }
    let off_diagonal: Vec<(Element, Element)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let subsets: u64 = 1 << off_diagonal.len();

    let mut rho = PairSet::diagonal(n);
    let mut diagonal_subsemigroups = 0;
    let mut congruences = 0;
    let mut lowest_failure: Option<u64> = None;
    for step in 0..subsets {
        if step > 0 {
            let (x, y) = off_diagonal[step.trailing_zeros() as usize];
            rho.toggle(x, y);
        }
        if first_product_escape(s, &rho).is_some() {
            continue;
        }
        diagonal_subsemigroups += 1;
        if first_asymmetry(&rho).is_none() && first_intransitivity(&rho).is_none() {
            congruences += 1;
        } else {
            let mask = step ^ (step >> 1);
            lowest_failure = Some(lowest_failure.map_or(mask, |m| m.min(mask)));
        }
    }

    let witness = lowest_failure.map(|mask| {
        let mut w = PairSet::diagonal(n);
        for (bit, &(x, y)) in off_diagonal.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                w.insert(x, y);
            }
        }
        w
    });
    Ok(DscScan {
        is_dsc: witness.is_none(),
        witness,
        diagonal_subsemigroups,
        congruences,
    })
}

/// A finite semigroup is DSC exactly when it is a group.
pub fn is_dsc_fast(s: &FiniteSemigroup) -> bool {
    is_group(s)
}
