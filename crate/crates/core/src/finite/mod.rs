//! Finite semigroups given by Cayley tables.
//!
//! Elements are dense indices `0..order`; names are only used for display
//! and serialization. Every [`FiniteSemigroup`] value has passed a full
//! associativity check.

mod catalog;
mod construct;
mod enumerate;
mod greens;
mod json;
mod quotient;
mod structure;
mod symmetric_inverse;

use std::fmt;

use thiserror::Error;

pub use catalog::{
    cyclic_group, direct_product, klein_four, left_zero, min_semilattice, right_zero,
    symmetric_group, trivial,
};
pub use construct::{rees_matrix, sandwich, ReesSpec};
pub use enumerate::{
    canonical_form, enumerate_semigroups, CanonicalForm, SemigroupEnumerator, MAX_CANONICAL_ORDER,
    MAX_ENUMERATION_ORDER,
};
pub use greens::{greens, partition_classes, GreensData};
pub use json::CayleyJson;
pub use quotient::{quotient, Quotient};
pub use structure::{
    idempotents, is_completely_simple, is_group, is_inverse, is_simple, natural_partial_order,
    principal_ideal, proper_ideal, semigroup_inverses,
};
pub use symmetric_inverse::{generate_symmetric_inverse, PartialInjection, MAX_SYMMETRIC_INVERSE};

/// Element index into a [`FiniteSemigroup`].
pub type Element = usize;

/// Errors raised while validating a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("semigroup order must be positive")]
    EmptyOrder,
    #[error("table has {rows} rows but order is {order}")]
    RowCount { order: usize, rows: usize },
    #[error("row {row} has {len} entries but order is {order}")]
    RowLength {
        order: usize,
        row: usize,
        len: usize,
    },
    #[error("{names} names given for a semigroup of order {order}")]
    NameCount { order: usize, names: usize },
    #[error("entry table[{row}][{col}] = {value} is out of range")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NonAssociative(usize, usize, usize),
    #[error("malformed Cayley JSON: {0}")]
    Parse(String),
}

/// Errors raised by operations on finite semigroups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error("order {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("the semigroup is not an inverse semigroup")]
    NotInverse,
    #[error("the relation is not a congruence")]
    NotACongruence,
    #[error("the semigroup is not a group")]
    NotAGroup,
    #[error("the semigroup is not a monoid")]
    NotAMonoid,
    #[error("sandwich matrix must be {rows}×{cols}")]
    SandwichShape { rows: usize, cols: usize },
    #[error("index sets of a Rees matrix semigroup must be non-empty")]
    EmptyIndexSet,
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
}

/// A finite semigroup stored as a validated Cayley table.
///
/// `table[i * order + j]` is the index of the product `x_i · x_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<Element>,
    names: Vec<String>,
}

/// Validates an `order × order` table and its element names.
///
/// Associativity is checked over all `order³` triples, in lexicographic
/// order, and the first failing triple is reported.
pub fn validate_cayley(
    order: usize,
    table: &[Vec<usize>],
    names: Vec<String>,
) -> Result<FiniteSemigroup, CayleyError> {
    if order == 0 {
        return Err(CayleyError::EmptyOrder);
    }
    if table.len() != order {
        return Err(CayleyError::RowCount {
            order,
            rows: table.len(),
        });
    }
    if names.len() != order {
        return Err(CayleyError::NameCount {
            order,
            names: names.len(),
        });
    }
    let mut flat = Vec::with_capacity(order * order);
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != order {
            return Err(CayleyError::RowLength {
                order,
                row,
                len: entries.len(),
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(CayleyError::OutOfRange { row, col, value });
            }
            flat.push(value);
        }
    }
    FiniteSemigroup::from_flat(order, flat, names)
}

/// Display names `"0"`, `"1"`, ... used when a table comes without names.
pub fn default_names(order: usize) -> Vec<String> {
    (0..order).map(|i| i.to_string()).collect()
}

impl FiniteSemigroup {
    /// Builds a semigroup from rows, using default names.
    pub fn from_rows(table: &[Vec<usize>]) -> Result<Self, CayleyError> {
        validate_cayley(table.len(), table, default_names(table.len()))
    }

    /// Builds a semigroup from a row-major flat table. Entries must already
    /// be in range; associativity is checked.
    pub fn from_flat(
        order: usize,
        table: Vec<Element>,
        names: Vec<String>,
    ) -> Result<Self, CayleyError> {
        if order == 0 {
            return Err(CayleyError::EmptyOrder);
        }
        if table.len() != order * order {
            return Err(CayleyError::RowCount {
                order,
                rows: table.len() / order,
            });
        }
        if names.len() != order {
            return Err(CayleyError::NameCount {
                order,
                names: names.len(),
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return Err(CayleyError::OutOfRange {
                row: pos / order,
                col: pos % order,
                value: table[pos],
            });
        }
        if let Some((i, j, k)) = first_non_associative(order, &table) {
            return Err(CayleyError::NonAssociative(i, j, k));
        }
        Ok(FiniteSemigroup {
            order,
            table,
            names,
        })
    }

    /// Builds a semigroup from a multiplication function on `0..order`.
    pub fn from_fn(
        order: usize,
        names: Vec<String>,
        mul: impl Fn(Element, Element) -> Element,
    ) -> Result<Self, CayleyError> {
        let mut table = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                table.push(mul(i, j));
            }
        }
        Self::from_flat(order, table, names)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.table[x * self.order + y]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Element) -> &str {
        &self.names[x]
    }

    /// Flat row-major table.
    pub fn flat_table(&self) -> &[Element] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    /// The two-sided identity, if any. Scans all elements; index 0 is not
    /// assumed to be special.
    pub fn identity(&self) -> Option<Element> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    pub fn is_idempotent(&self, x: Element) -> bool {
        self.mul(x, x) == x
    }

    /// Product of a non-empty sequence of elements.
    pub fn product(&self, xs: &[Element]) -> Option<Element> {
        let (&first, rest) = xs.split_first()?;
        Some(rest.iter().fold(first, |acc, &y| self.mul(acc, y)))
    }

    /// Copy of this semigroup with new display names.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self, CayleyError> {
        if names.len() != self.order {
            return Err(CayleyError::NameCount {
                order: self.order,
                names: names.len(),
            });
        }
        Ok(FiniteSemigroup {
            names,
            ..self.clone()
        })
    }

    /// Relabels element `i` as `perm[i]`. `perm` must be a permutation of
    /// `0..order`.
    pub fn relabel(&self, perm: &[Element]) -> Self {
        assert_eq!(perm.len(), self.order, "permutation length");
        let n = self.order;
        let mut table = vec![0; n * n];
        let mut names = vec![String::new(); n];
        for i in 0..n {
            names[perm[i]] = self.names[i].clone();
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)];
            }
        }
        FiniteSemigroup {
            order: n,
            table,
            names,
        }
    }
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("order", &self.order)
            .field("names", &self.names)
            .field("table", &self.rows())
            .finish()
    }
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.names.iter().map(String::len).max().unwrap_or(1);
        write!(f, "{:>width$} |", "·")?;
        for name in &self.names {
            write!(f, " {name:>width$}")?;
        }
        writeln!(f)?;
        for i in self.elements() {
            write!(f, "{:>width$} |", self.names[i])?;
            for j in self.elements() {
                write!(f, " {:>width$}", self.names[self.mul(i, j)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub(crate) fn first_non_associative(
    order: usize,
    table: &[Element],
) -> Option<(usize, usize, usize)> {
    let at = |i: usize, j: usize| table[i * order + j];
    for i in 0..order {
        for j in 0..order {
            let ij = at(i, j);
            for k in 0..order {
                if at(ij, k) != at(i, at(j, k)) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_zero_table_validates() {
        let s = validate_cayley(2, &[vec![0, 0], vec![1, 1]], default_names(2)).unwrap();
        assert_eq!(s.mul(0, 1), 0);
        assert_eq!(s.mul(1, 0), 1);
    }

    #[test]
    fn cyclic_two_validates() {
        let s = FiniteSemigroup::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn reports_first_non_associative_triple() {
        let err = FiniteSemigroup::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap_err();
        assert_eq!(err, CayleyError::NonAssociative(1, 0, 1));
    }

    #[test]
    fn rejects_out_of_range_entries() {
        let err = FiniteSemigroup::from_rows(&[vec![0, 2], vec![0, 0]]).unwrap_err();
        assert_eq!(
            err,
            CayleyError::OutOfRange {
                row: 0,
                col: 1,
                value: 2
            }
        );
    }

    #[test]
    fn rejects_shape_errors() {
        assert_eq!(
            validate_cayley(0, &[], vec![]).unwrap_err(),
            CayleyError::EmptyOrder
        );
        assert!(matches!(
            validate_cayley(2, &[vec![0, 0]], default_names(2)),
            Err(CayleyError::RowCount { .. })
        ));
        assert!(matches!(
            validate_cayley(2, &[vec![0, 0], vec![0]], default_names(2)),
            Err(CayleyError::RowLength { row: 1, .. })
        ));
        assert!(matches!(
            validate_cayley(1, &[vec![0]], default_names(2)),
            Err(CayleyError::NameCount { .. })
        ));
    }

    #[test]
    fn relabel_preserves_structure() {
        let s = cyclic_group(3);
        let r = s.relabel(&[2, 0, 1]);
        assert_eq!(r.identity(), Some(2));
        for i in 0..3 {
            for j in 0..3 {
                let p = [2, 0, 1];
                assert_eq!(r.mul(p[i], p[j]), p[s.mul(i, j)]);
            }
        }
    }
}
