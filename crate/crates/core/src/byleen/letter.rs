use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::finite::{Element, FiniteSemigroup};

/// A pair `(n, s)` naming an element of `A = ℕ × S` or `B = ℕ × S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indexed {
    pub n: BigUint,
    pub s: Element,
}

impl Indexed {
    pub fn new(n: impl Into<BigUint>, s: Element) -> Self {
        Indexed { n: n.into(), s }
    }

    /// Position `n·|S| + s` in a fixed enumeration of `ℕ × S`.
    pub fn index(&self, order: usize) -> BigUint {
        &self.n * BigUint::from(order) + BigUint::from(self.s)
    }

    pub fn from_index(index: &BigUint, order: usize) -> Self {
        let (n, s) = index.div_rem(&BigUint::from(order));
        let s = usize::try_from(&s).expect("remainder below the order");
        Indexed { n, s }
    }
}

/// A generator of Byleen's monoid: one of the three disjoint alphabets
/// `A`, `B` and the base monoid `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A(Indexed),
    B(Indexed),
    S(Element),
}

impl Letter {
    pub fn a(n: impl Into<BigUint>, s: Element) -> Self {
        Letter::A(Indexed::new(n, s))
    }

    pub fn b(n: impl Into<BigUint>, s: Element) -> Self {
        Letter::B(Indexed::new(n, s))
    }

    /// Position in a fixed enumeration of `W = A ∪ B ∪ S`: base elements
    /// first, then `A` and `B` interleaved.
    pub fn w_index(&self, order: usize) -> BigUint {
        let base = BigUint::from(order);
        match self {
            Letter::S(s) => BigUint::from(*s),
            Letter::A(x) => base + x.index(order) * 2u32,
            Letter::B(x) => base + x.index(order) * 2u32 + 1u32,
        }
    }

    pub fn from_w_index(w: &BigUint, order: usize) -> Self {
        let base = BigUint::from(order);
        if *w < base {
            return Letter::S(usize::try_from(w).expect("below the order"));
        }
        let (idx, tag) = (w - base).div_rem(&BigUint::from(2u32));
        let x = Indexed::from_index(&idx, order);
        if tag == BigUint::from(0u32) {
            Letter::A(x)
        } else {
            Letter::B(x)
        }
    }

    /// Largest base element mentioned, for range checks.
    pub fn base_element(&self) -> Element {
        match self {
            Letter::A(x) | Letter::B(x) => x.s,
            Letter::S(s) => *s,
        }
    }
}

/// `(n, t) ▷ s = (n, t·s)`.
pub fn a_act(base: &FiniteSemigroup, a: &Indexed, s: Element) -> Indexed {
    Indexed {
        n: a.n.clone(),
        s: base.mul(a.s, s),
    }
}

/// `s ◁ (n, t) = (n, s·t)`.
pub fn b_act(base: &FiniteSemigroup, s: Element, b: &Indexed) -> Indexed {
    Indexed {
        n: b.n.clone(),
        s: base.mul(s, b.s),
    }
}

impl fmt::Display for Indexed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},s{})", self.n, self.s)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::A(x) => write!(f, "a{x}"),
            Letter::B(x) => write!(f, "b{x}"),
            Letter::S(s) => write!(f, "s{s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::cyclic_group;

    #[test]
    fn w_index_round_trips() {
        for order in 1..=3 {
            for w in 0u32..200 {
                let w = BigUint::from(w);
                let letter = Letter::from_w_index(&w, order);
                assert_eq!(letter.w_index(order), w);
            }
        }
    }

    #[test]
    fn actions_are_actions() {
        let c3 = cyclic_group(3);
        let a = Indexed::new(5u32, 1);
        for s in c3.elements() {
            for t in c3.elements() {
                assert_eq!(
                    a_act(&c3, &a_act(&c3, &a, s), t),
                    a_act(&c3, &a, c3.mul(s, t))
                );
                assert_eq!(
                    b_act(&c3, s, &b_act(&c3, t, &a)),
                    b_act(&c3, c3.mul(s, t), &a)
                );
            }
        }
        assert_eq!(a_act(&c3, &a, 0), a);
    }

    #[test]
    fn zero_row_is_faithful() {
        let c3 = cyclic_group(3);
        let a = Indexed::new(0u32, 0);
        for s in c3.elements() {
            for t in c3.elements().filter(|&t| t != s) {
                assert_ne!(a_act(&c3, &a, s), a_act(&c3, &a, t));
            }
        }
    }
}
