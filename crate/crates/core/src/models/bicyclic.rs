use std::fmt;
use std::ops::Mul;

use serde::Serialize;

/// Element `(m, n)` of the bicyclic monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bicyclic {
    pub m: u64,
    pub n: u64,
}

impl Bicyclic {
    pub const IDENTITY: Bicyclic = Bicyclic { m: 0, n: 0 };

    pub fn new(m: u64, n: u64) -> Self {
        Bicyclic { m, n }
    }

    pub fn is_idempotent(self) -> bool {
        self.m == self.n
    }
}

impl fmt::Display for Bicyclic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// `(m, n)(p, q) = (m − n + k, q − p + k)` with `k = max(n, p)`.
pub fn bicyclic_mul(x: Bicyclic, y: Bicyclic) -> Bicyclic {
    let k = x.n.max(y.m);
    Bicyclic {
        m: x.m + (k - x.n),
        n: y.n + (k - y.m),
    }
}

impl Mul for Bicyclic {
    type Output = Bicyclic;

    fn mul(self, rhs: Bicyclic) -> Bicyclic {
        bicyclic_mul(self, rhs)
    }
}

/// Natural partial order `x ≤ y ⟺ x = e·y` for an idempotent `e`.
///
/// Closed form: `(k, k)(p, q) = (K, q − p + K)` with `K = max(k, p)`, so
/// `(m, n) ≤ (p, q)` iff `m ≥ p` and `m − n = p − q`.
pub fn bicyclic_leq(x: Bicyclic, y: Bicyclic) -> bool {
    x.m >= y.m && x.m as i128 - x.n as i128 == y.m as i128 - y.n as i128
}

/// The order by its definition: search idempotents `(k, k)` with
/// `k ≤ bound`.
pub fn bicyclic_leq_by_search(x: Bicyclic, y: Bicyclic, bound: u64) -> bool {
    (0..=bound).any(|k| bicyclic_mul(Bicyclic::new(k, k), y) == x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(m: u64, n: u64) -> Bicyclic {
        Bicyclic::new(m, n)
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(b(2, 3) * b(1, 4), b(2, 6));
        assert_eq!(Bicyclic::IDENTITY * b(4, 7), b(4, 7));
        assert_eq!(b(4, 7) * Bicyclic::IDENTITY, b(4, 7));
        assert_eq!(b(0, 1) * b(1, 0), b(0, 0));
        assert_eq!(b(1, 0) * b(0, 1), b(1, 1));
    }

    #[test]
    fn order_examples() {
        assert!(bicyclic_leq(b(1, 1), b(0, 0)));
        assert!(!bicyclic_leq(b(0, 0), b(1, 1)));
        assert!(bicyclic_leq(b(3, 5), b(3, 5)));
        assert!(bicyclic_leq_by_search(b(1, 1), b(0, 0), 6));
        assert!(!bicyclic_leq_by_search(b(0, 0), b(1, 1), 6));
    }

    #[test]
    fn closed_form_matches_search() {
        for x in (0..=6).flat_map(|m| (0..=6).map(move |n| b(m, n))) {
            for y in (0..=6).flat_map(|m| (0..=6).map(move |n| b(m, n))) {
                assert_eq!(
                    bicyclic_leq(x, y),
                    bicyclic_leq_by_search(x, y, 12),
                    "{x} {y}"
                );
            }
        }
    }
}
