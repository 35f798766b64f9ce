use std::fmt;

use serde::Serialize;

use super::{axiom_report, AxiomReport, PairSet, RelationsError};
use crate::finite::{greens, is_group, proper_ideal, Element, FiniteSemigroup, GreensData};

/// Which construction produced a [`NonDscWitness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Strategy {
    /// `I × S ∪ Δ` for a proper ideal `I`.
    #[serde(rename = "ideal")]
    Ideal,
    /// L-related pairs from one R-class into another, plus H.
    #[serde(rename = "rees-R")]
    ReesR,
    /// R-related pairs from one L-class into another, plus H.
    #[serde(rename = "rees-L")]
    ReesL,
}

impl Strategy {
    pub fn tag(self) -> &'static str {
        match self {
            Strategy::Ideal => "ideal",
            Strategy::ReesR => "rees-R",
            Strategy::ReesL => "rees-L",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A diagonal subsemigroup that is not symmetric, with the first pair whose
/// reverse is missing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonDscWitness {
    pub strategy: Strategy,
    pub relation: PairSet,
    pub failing_pair: (Element, Element),
    pub axioms: AxiomReport,
}

/// Builds and verifies a non-congruence diagonal subsemigroup for a finite
/// non-group.
///
/// A semigroup with a proper ideal gets the ideal construction; otherwise
/// it is finite and simple, hence completely simple with at least two R- or
/// two L-classes, and the Rees-matrix construction applies to the two
/// classes with the smallest members.
pub fn witness_non_dsc(s: &FiniteSemigroup) -> Result<NonDscWitness, RelationsError> {
    if is_group(s) {
        return Err(RelationsError::IsGroup);
    }
    let n = s.order();
    let (strategy, relation) = match proper_ideal(s) {
        Some(ideal) => {
            let mut rho = PairSet::diagonal(n);
            for &x in &ideal {
                for y in s.elements() {
                    rho.insert(x, y);
                }
            }
            (Strategy::Ideal, rho)
        }
        None => {
            let g = greens(s);
            if g.r_count() >= 2 {
                (
                    Strategy::ReesR,
                    cross_class_relation(&g.r_class, &g.l_class, &g.h_class),
                )
            } else {
                (
                    Strategy::ReesL,
                    cross_class_relation(&g.l_class, &g.r_class, &g.h_class),
                )
            }
        }
    };

    let axioms = axiom_report(s, &relation);
    if !axioms.is_diagonal_subsemigroup() {
        return Err(RelationsError::WitnessRejected(format!(
            "{strategy} relation is not a diagonal subsemigroup"
        )));
    }
    let failing_pair = axioms.symmetric_violation.ok_or_else(|| {
        RelationsError::WitnessRejected(format!("{strategy} relation is symmetric"))
    })?;
    Ok(NonDscWitness {
        strategy,
        relation,
        failing_pair,
        axioms,
    })
}

/// `{(x, y) : x ≈ y, x ∈ C_first, y ∈ C_second} ∪ H`, where `C_first` and
/// `C_second` are the outer classes with the two smallest members and `≈`
/// is the inner relation.
fn cross_class_relation(outer: &[usize], inner: &[usize], h: &[usize]) -> PairSet {
    let n = outer.len();
    let classes = GreensData::classes(outer);
    // Classes are numbered by first occurrence, so ids 0 and 1 hold the two
    // smallest members.
    let (first, second) = (&classes[0], &classes[1]);
    let mut rho = PairSet::empty(n);
    for &x in first {
        for &y in second {
            if inner[x] == inner[y] {
                rho.insert(x, y);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if h[x] == h[y] {
                rho.insert(x, y);
            }
        }
    }
    rho
}
