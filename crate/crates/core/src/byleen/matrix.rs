use num_bigint::BigUint;

use super::code::{decode, encode};
use super::letter::{Indexed, Letter};
use super::ByleenError;
use crate::finite::{Element, FiniteSemigroup};

const REQUIREMENT_ARITY: usize = 5;

/// A 2-transitive `A × B` matrix over `W = A ∪ B ∪ S`, resolved lazily.
///
/// Entries have the form `p[(n,t),(m,u)] = Q(n, m, t·u)`, which makes the
/// matrix compatible with the actions: `p[a▷s, b] = p[a, s◁b]`, the
/// condition under which the rewriting rules have unique normal forms.
///
/// A requirement "column `b` with `p[a₁,b] = c₁` and `p[a₂,b] = c₂`" is
/// answered by the column `(m, 1)` where `m` packs `(a₁, a₂, c₁, c₂, skip)`
/// with [`encode`]; rows are dual. Since every packed component is smaller
/// than the code, a cell `(n, m, r)` can be claimed by its column code
/// (`n < m`) or by its row code (`m < n`) but never both, so no two
/// requirements conflict. Cells nobody claims hold `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTransitiveMatrix {
    base: FiniteSemigroup,
    identity: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Requirement {
    first: Indexed,
    second: Indexed,
    c1: Letter,
    c2: Letter,
}

impl TwoTransitiveMatrix {
    pub fn new(base: FiniteSemigroup) -> Result<Self, ByleenError> {
        let identity = base.identity().ok_or(ByleenError::NotAMonoid)?;
        Ok(TwoTransitiveMatrix { base, identity })
    }

    pub fn base(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    fn pack(
        &self,
        first: &Indexed,
        second: &Indexed,
        c1: &Letter,
        c2: &Letter,
        skip: u64,
    ) -> BigUint {
        let k = self.base.order();
        encode(&[
            first.index(k),
            second.index(k),
            c1.w_index(k),
            c2.w_index(k),
            BigUint::from(skip),
        ])
    }

    fn unpack(&self, code: &BigUint) -> Option<Requirement> {
        let k = self.base.order();
        let parts = decode(code, REQUIREMENT_ARITY)?;
        if parts[0] == parts[1] {
            return None;
        }
        Some(Requirement {
            first: Indexed::from_index(&parts[0], k),
            second: Indexed::from_index(&parts[1], k),
            c1: Letter::from_w_index(&parts[2], k),
            c2: Letter::from_w_index(&parts[3], k),
        })
    }

    /// `p[a, b]`.
    pub fn entry(&self, a: &Indexed, b: &Indexed) -> Letter {
        let r = self.base.mul(a.s, b.s);
        let lookup = |req: Requirement, other: &BigUint| {
            if req.first.n == *other && req.first.s == r {
                Some(req.c1)
            } else if req.second.n == *other && req.second.s == r {
                Some(req.c2)
            } else {
                None
            }
        };
        self.unpack(&b.n)
            .and_then(|req| lookup(req, &a.n))
            .or_else(|| self.unpack(&a.n).and_then(|req| lookup(req, &b.n)))
            .unwrap_or(Letter::S(self.identity))
    }

    /// A column `b` with `p[a₁,b] = c₁` and `p[a₂,b] = c₂`. Distinct `skip`
    /// values give distinct columns for the same requirement.
    pub fn find_column(
        &self,
        a1: &Indexed,
        a2: &Indexed,
        c1: &Letter,
        c2: &Letter,
        skip: u64,
    ) -> Result<Indexed, ByleenError> {
        if a1 == a2 {
            return Err(ByleenError::EqualIndices);
        }
        let b = Indexed {
            n: self.pack(a1, a2, c1, c2, skip),
            s: self.identity,
        };
        self.check(
            self.entry(a1, &b) == *c1 && self.entry(a2, &b) == *c2,
            "column",
        )?;
        Ok(b)
    }

    /// A row `a` with `p[a,b₁] = c₁` and `p[a,b₂] = c₂`.
    pub fn find_row(
        &self,
        b1: &Indexed,
        b2: &Indexed,
        c1: &Letter,
        c2: &Letter,
        skip: u64,
    ) -> Result<Indexed, ByleenError> {
        if b1 == b2 {
            return Err(ByleenError::EqualIndices);
        }
        let a = Indexed {
            n: self.pack(b1, b2, c1, c2, skip),
            s: self.identity,
        };
        self.check(
            self.entry(&a, b1) == *c1 && self.entry(&a, b2) == *c2,
            "row",
        )?;
        Ok(a)
    }

    /// A column `b` with `p[a,b] = c`.
    pub fn column_for(&self, a: &Indexed, c: &Letter, skip: u64) -> Indexed {
        let other = self.other_than(a);
        self.find_column(a, &other, c, &Letter::S(self.identity), skip)
            .expect("distinct by construction")
    }

    /// A row `a` with `p[a,b] = c`.
    pub fn row_for(&self, b: &Indexed, c: &Letter, skip: u64) -> Indexed {
        let other = self.other_than(b);
        self.find_row(b, &other, c, &Letter::S(self.identity), skip)
            .expect("distinct by construction")
    }

    fn other_than(&self, x: &Indexed) -> Indexed {
        let zero = Indexed::new(0u32, self.identity);
        if *x == zero {
            Indexed::new(1u32, self.identity)
        } else {
            zero
        }
    }

    fn check(&self, ok: bool, what: &str) -> Result<(), ByleenError> {
        if ok {
            Ok(())
        } else {
            Err(ByleenError::Unverified(format!(
                "{what} lookup disagrees with its entries"
            )))
        }
    }
}
