//! Byleen's monoid `C¹(S; α, β; P)` over a finite base monoid `S`.
//!
//! The generators are `A = ℕ × S`, `B = ℕ × S` and `S` itself, with
//! relations `ab = p[a,b]`, `as = a▷s`, `sb = s◁b`, `st = s·t`, `1 = ε`.
//! Both actions multiply the second coordinate, so they are faithful, and
//! `P` is the lazily resolved [`TwoTransitiveMatrix`]. Every element has a
//! unique [`NormalForm`] `v s u` with `v ∈ B*`, `u ∈ A*`.
//!
//! The constructive claims and [`Byleen::span_witness`] produce explicit
//! products of diagonal pairs and one off-diagonal generator reaching any
//! target pair; each certificate is checked by evaluation before it is
//! returned.

mod claims;
mod code;
mod letter;
mod matrix;
mod normal;
mod span;
mod syntax;

use thiserror::Error;

use crate::finite::{semigroup_inverses, Element, FiniteSemigroup};

pub use claims::Side;
pub use code::{decode, encode};
pub use letter::{a_act, b_act, Indexed, Letter};
pub use matrix::TwoTransitiveMatrix;
pub use normal::{reduce, rewrite_pair, NormalForm};
pub use span::{Factor, PairExpr, SpanCase};
pub use syntax::{parse_letter, parse_word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ByleenError {
    #[error("base semigroup is not a monoid")]
    NotAMonoid,
    #[error("2-transitivity needs two distinct indices")]
    EqualIndices,
    #[error("the generating pair must have distinct coordinates")]
    EqualElements,
    #[error("base element s{0} has no inverse")]
    NotRegularBase(Element),
    #[error("normal form mentions base elements outside this monoid")]
    MatrixMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("certificate failed verification: {0}")]
    Unverified(String),
}

/// Byleen's monoid over a fixed finite base monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Byleen {
    matrix: TwoTransitiveMatrix,
}

impl Byleen {
    pub fn new(base: FiniteSemigroup) -> Result<Self, ByleenError> {
        Ok(Byleen {
            matrix: TwoTransitiveMatrix::new(base)?,
        })
    }

    pub fn matrix(&self) -> &TwoTransitiveMatrix {
        &self.matrix
    }

    pub fn base(&self) -> &FiniteSemigroup {
        self.matrix.base()
    }

    pub fn base_identity(&self) -> Element {
        self.matrix.identity()
    }

    pub fn one(&self) -> NormalForm {
        NormalForm::identity(self.base_identity())
    }

    pub fn entry(&self, a: &Indexed, b: &Indexed) -> Letter {
        self.matrix.entry(a, b)
    }

    pub fn reduce(&self, word: &[Letter]) -> NormalForm {
        reduce(&self.matrix, word)
    }

    pub fn letter(&self, w: &Letter) -> NormalForm {
        self.reduce(std::slice::from_ref(w))
    }

    /// Fails with [`ByleenError::MatrixMismatch`] if `x` does not belong to
    /// this monoid.
    pub fn check(&self, x: &NormalForm) -> Result<(), ByleenError> {
        if x.max_base_element() >= self.base().order() || x.base_identity() != self.base_identity()
        {
            Err(ByleenError::MatrixMismatch)
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, x: &NormalForm, y: &NormalForm) -> Result<NormalForm, ByleenError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.product(&[x, y]))
    }

    pub(crate) fn product(&self, factors: &[&NormalForm]) -> NormalForm {
        let word: Vec<Letter> = factors.iter().flat_map(|f| f.letters()).collect();
        self.reduce(&word)
    }

    /// `y s′ x` with `s s′ s = s`, `s′ s s′ = s′`, `a′ᵢ bᵢ = 1` for the
    /// letters `bᵢ` of `v`, and `aⱼ b′ⱼ = 1` for the letters `aⱼ` of `u`.
    pub fn inverse_of(
        &self,
        t: &NormalForm,
        inverse: impl Fn(Element) -> Option<Element>,
    ) -> Result<NormalForm, ByleenError> {
        self.check(t)?;
        let base = self.base();
        let s = t.s;
        let s_inv = inverse(s)
            .filter(|&r| r < base.order())
            .filter(|&r| base.mul(base.mul(s, r), s) == s && base.mul(base.mul(r, s), r) == r)
            .ok_or(ByleenError::NotRegularBase(s))?;
        let one = Letter::S(self.base_identity());
        let x: Vec<Indexed> =
            t.v.iter()
                .rev()
                .map(|b| self.matrix.row_for(b, &one, 0))
                .collect();
        let y: Vec<Indexed> =
            t.u.iter()
                .rev()
                .map(|a| self.matrix.column_for(a, &one, 0))
                .collect();
        let inv = NormalForm::from_parts(y, s_inv, x, self.base_identity());
        let ok = self.product(&[t, &inv, t]) == *t && self.product(&[&inv, t, &inv]) == inv;
        if !ok {
            return Err(ByleenError::Unverified(format!(
                "{inv} is not an inverse of {t}"
            )));
        }
        Ok(inv)
    }

    /// [`Byleen::inverse_of`] with inverses taken in the base table.
    pub fn regular_inverse(&self, t: &NormalForm) -> Result<NormalForm, ByleenError> {
        let base = self.base().clone();
        self.inverse_of(t, move |s| semigroup_inverses(&base, s).first().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{cyclic_group, left_zero, min_semilattice, trivial};

    #[test]
    fn base_must_be_a_monoid() {
        assert_eq!(
            Byleen::new(left_zero(2)).unwrap_err(),
            ByleenError::NotAMonoid
        );
    }

    #[test]
    fn inverse_of_identity() {
        let m = Byleen::new(trivial()).unwrap();
        assert_eq!(m.regular_inverse(&m.one()).unwrap(), m.one());
    }

    #[test]
    fn inverses_over_c2() {
        let m = Byleen::new(cyclic_group(2)).unwrap();
        let t = m.reduce(&[Letter::S(1), Letter::a(0u32, 0)]);
        let inv = m.regular_inverse(&t).unwrap();
        assert_eq!(inv.s, 1);
        assert_eq!(inv.v.len(), 1);
        let t = m.reduce(&[Letter::b(0u32, 0)]);
        let inv = m.regular_inverse(&t).unwrap();
        assert_eq!(inv.u.len(), 1);
    }

    #[test]
    fn irregular_oracle_is_rejected() {
        let m = Byleen::new(cyclic_group(2)).unwrap();
        let t = m.reduce(&[Letter::S(1)]);
        assert_eq!(
            m.inverse_of(&t, |_| None),
            Err(ByleenError::NotRegularBase(1))
        );
        assert_eq!(
            m.inverse_of(&t, |_| Some(0)),
            Err(ByleenError::NotRegularBase(1))
        );
    }

    #[test]
    fn semilattice_base_is_regular() {
        let m = Byleen::new(min_semilattice()).unwrap();
        let t = m.reduce(&[Letter::b(1u32, 0), Letter::S(0), Letter::a(2u32, 1)]);
        m.regular_inverse(&t).unwrap();
    }

    #[test]
    fn foreign_normal_forms_rejected() {
        let small = Byleen::new(trivial()).unwrap();
        let big = Byleen::new(cyclic_group(3)).unwrap();
        let x = big.reduce(&[Letter::a(0u32, 2)]);
        assert_eq!(
            small.mul(&x, &small.one()),
            Err(ByleenError::MatrixMismatch)
        );
    }
}
