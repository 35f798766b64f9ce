use itertools::Itertools;

use super::{default_names, Element, FiniteError, FiniteSemigroup};

/// Largest order accepted by [`enumerate_semigroups`].
pub const MAX_ENUMERATION_ORDER: usize = 4;
/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 5;

const UNSET: usize = usize::MAX;

/// Depth-first enumeration of all labeled associative tables of a fixed
/// order. Cells are filled row-major and a partial table is abandoned as
/// soon as some fully defined triple violates associativity.
#[derive(Debug, Clone)]
pub struct SemigroupEnumerator {
    n: usize,
    cells: Vec<usize>,
    pos: usize,
    /// Cells below this position are fixed by the caller.
    floor: usize,
    emitted: bool,
    done: bool,
}

/// Every labeled associative `n × n` table, each exactly once.
pub fn enumerate_semigroups(n: usize) -> Result<SemigroupEnumerator, FiniteError> {
    check_order(n)?;
    Ok(SemigroupEnumerator {
        n,
        cells: vec![UNSET; n * n],
        pos: 0,
        floor: 0,
        emitted: false,
        done: false,
    })
}

fn check_order(n: usize) -> Result<(), FiniteError> {
    if n == 0 {
        return Err(FiniteError::Cayley(super::CayleyError::EmptyOrder));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(FiniteError::TooLarge {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(())
}

impl SemigroupEnumerator {
    /// Restricts the enumeration to tables whose first row is `row`. The
    /// streams for all `n^n` first rows partition the full enumeration, so
    /// they can be handed to independent workers.
    pub fn with_first_row(n: usize, row: &[Element]) -> Result<Self, FiniteError> {
        check_order(n)?;
        if row.len() != n {
            return Err(FiniteError::Cayley(super::CayleyError::RowLength {
                order: n,
                row: 0,
                len: row.len(),
            }));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= n) {
            return Err(FiniteError::ElementOutOfRange(bad));
        }
        let mut cells = vec![UNSET; n * n];
        cells[..n].copy_from_slice(row);
        let consistent = partial_is_associative(n, &cells);
        if n == 1 {
            // Single cell, fixed: emit it once if associative.
            return Ok(SemigroupEnumerator {
                n,
                cells,
                pos: 0,
                floor: 1,
                emitted: false,
                done: !consistent,
            });
        }
        Ok(SemigroupEnumerator {
            n,
            cells,
            pos: n,
            floor: n,
            emitted: false,
            done: !consistent,
        })
    }

    fn emit(&self) -> FiniteSemigroup {
        FiniteSemigroup::from_flat(self.n, self.cells.clone(), default_names(self.n))
            .expect("enumerator only emits associative tables")
    }
}

impl Iterator for SemigroupEnumerator {
    type Item = FiniteSemigroup;

    fn next(&mut self) -> Option<FiniteSemigroup> {
        if self.done {
            return None;
        }
        let total = self.n * self.n;
        if self.floor == total {
            // Fully fixed table.
            self.done = true;
            return Some(self.emit());
        }
        if self.emitted {
            self.pos = total - 1;
            self.emitted = false;
        }
        loop {
            let next = match self.cells[self.pos] {
                UNSET => 0,
                v => v + 1,
            };
            if next >= self.n {
                self.cells[self.pos] = UNSET;
                if self.pos == self.floor {
                    self.done = true;
                    return None;
                }
                self.pos -= 1;
                continue;
            }
            self.cells[self.pos] = next;
            if !partial_is_associative(self.n, &self.cells) {
                continue;
            }
            if self.pos + 1 == total {
                self.emitted = true;
                return Some(self.emit());
            }
            self.pos += 1;
        }
    }
}

/// No fully defined triple of the partial table violates associativity.
fn partial_is_associative(n: usize, cells: &[usize]) -> bool {
    for i in 0..n {
        for j in 0..n {
            let ij = cells[i * n + j];
            if ij == UNSET {
                continue;
            }
            for k in 0..n {
                let left = cells[ij * n + k];
                let jk = cells[j * n + k];
                if left == UNSET || jk == UNSET {
                    continue;
                }
                let right = cells[i * n + jk];
                if right != UNSET && left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographically smallest flat table over all relabelings; two
/// semigroups are isomorphic iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub table: Vec<Element>,
}

pub fn canonical_form(s: &FiniteSemigroup) -> Result<CanonicalForm, FiniteError> {
    let n = s.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(FiniteError::TooLarge {
            n,
            max: MAX_CANONICAL_ORDER,
        });
    }
    let mut best: Option<Vec<Element>> = None;
    let mut candidate = vec![0; n * n];
    for perm in (0..n).permutations(n) {
        for i in 0..n {
            for j in 0..n {
                candidate[perm[i] * n + perm[j]] = perm[s.mul(i, j)];
            }
        }
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate.clone());
        }
    }
    Ok(CanonicalForm {
        order: n,
        table: best.expect("at least one permutation"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::first_non_associative;
    use std::collections::HashSet;

    /// Every `n^(n²)` table, filtered by a direct associativity check.
    fn brute_force_count(n: usize) -> usize {
        let cells = n * n;
        let total = n.pow(cells as u32);
        let mut table = vec![0; cells];
        (0..total)
            .filter(|&code| {
                let mut c = code;
                for cell in table.iter_mut() {
                    *cell = c % n;
                    c /= n;
                }
                first_non_associative(n, &table).is_none()
            })
            .count()
    }

    #[test]
    fn order_one_has_one_table() {
        assert_eq!(enumerate_semigroups(1).unwrap().count(), 1);
    }

    #[test]
    fn labeled_counts_match_brute_force() {
        for n in 1..=3 {
            assert_eq!(
                enumerate_semigroups(n).unwrap().count(),
                brute_force_count(n),
                "order {n}"
            );
        }
    }

    #[test]
    fn golden_labeled_counts() {
        let counts: Vec<usize> = (1..=3)
            .map(|n| enumerate_semigroups(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 8, 113]);
    }

    #[test]
    fn emitted_tables_are_distinct() {
        let tables: HashSet<Vec<usize>> = enumerate_semigroups(3)
            .unwrap()
            .map(|s| s.flat_table().to_vec())
            .collect();
        assert_eq!(tables.len(), 113);
    }

    #[test]
    fn first_row_split_partitions_the_stream() {
        let n = 3;
        let mut total = 0;
        for row in (0..n).map(|_| 0..n).multi_cartesian_product() {
            total += SemigroupEnumerator::with_first_row(n, &row)
                .unwrap()
                .count();
        }
        assert_eq!(total, 113);
        assert_eq!(
            SemigroupEnumerator::with_first_row(1, &[0])
                .unwrap()
                .count(),
            1
        );
    }

    #[test]
    fn isomorphism_class_counts() {
        for (n, expected) in [(1, 1), (2, 5), (3, 24)] {
            let classes: HashSet<CanonicalForm> = enumerate_semigroups(n)
                .unwrap()
                .map(|s| canonical_form(&s).unwrap())
                .collect();
            assert_eq!(classes.len(), expected, "order {n}");
        }
    }

    #[test]
    fn too_large_is_rejected() {
        assert!(matches!(
            enumerate_semigroups(5),
            Err(FiniteError::TooLarge { n: 5, max: 4 })
        ));
        let big = crate::finite::cyclic_group(6);
        assert!(matches!(
            canonical_form(&big),
            Err(FiniteError::TooLarge { n: 6, max: 5 })
        ));
    }
}
