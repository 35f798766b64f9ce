use super::greens::partition_classes;
use super::{Element, FiniteError, FiniteSemigroup};
use crate::relations::{is_congruence, PairSet};

/// The quotient `S/σ` together with the class map `x ↦ xσ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub semigroup: FiniteSemigroup,
    pub class_of: Vec<Element>,
}

impl Quotient {
    /// Members of each class.
    pub fn classes(&self) -> Vec<Vec<Element>> {
        let mut out = vec![Vec::new(); self.semigroup.order()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }
}

/// Cayley table on the σ-classes. Classes are numbered by their smallest
/// member.
pub fn quotient(s: &FiniteSemigroup, sigma: &PairSet) -> Result<Quotient, FiniteError> {
    if sigma.order() != s.order() || !is_congruence(s, sigma) {
        return Err(FiniteError::NotACongruence);
    }
    let class_of = partition_classes(s.elements().map(|x| sigma.row(x)));
    let count = class_of.iter().max().map_or(0, |m| m + 1);
    let mut rep = vec![usize::MAX; count];
    for (x, &c) in class_of.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = x;
        }
    }
    let names = (0..count)
        .map(|c| {
            let members: Vec<&str> = s
                .elements()
                .filter(|&x| class_of[x] == c)
                .map(|x| s.name(x))
                .collect();
            format!("[{}]", members.join(","))
        })
        .collect();
    let semigroup = FiniteSemigroup::from_fn(count, names, |a, b| class_of[s.mul(rep[a], rep[b])])?;
    Ok(Quotient {
        semigroup,
        class_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{canonical_form, cyclic_group, left_zero};
    use crate::relations::congruence_generated;

    #[test]
    fn c4_mod_two() {
        let c4 = cyclic_group(4);
        let sigma = congruence_generated(&c4, &[(0, 2)]);
        let q = quotient(&c4, &sigma).unwrap();
        assert_eq!(q.classes(), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(
            canonical_form(&q.semigroup).unwrap(),
            canonical_form(&cyclic_group(2)).unwrap()
        );
    }

    #[test]
    fn diagonal_and_full_quotients() {
        let s = left_zero(3);
        let q = quotient(&s, &PairSet::diagonal(3)).unwrap();
        assert_eq!(q.semigroup.rows(), s.rows());
        let q = quotient(&s, &PairSet::full(3)).unwrap();
        assert_eq!(q.semigroup.order(), 1);
    }

    #[test]
    fn rejects_non_congruence() {
        let s = left_zero(2);
        let mut rho = PairSet::diagonal(2);
        rho.insert(0, 1);
        assert_eq!(quotient(&s, &rho).unwrap_err(), FiniteError::NotACongruence);
    }
}
