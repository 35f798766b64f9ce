use serde::Serialize;

use super::letter::{Indexed, Letter};
use super::normal::NormalForm;
use super::{Byleen, ByleenError};

/// Which coordinate of a pair of words became the identity: `Left` is
/// `(1, p)`, `Right` is `(p, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Bound on the `skip` retries needed to keep a chain off its start.
const MAX_SKIP: u64 = 64;

fn unverified(what: &str) -> ByleenError {
    ByleenError::Unverified(what.to_string())
}

impl Byleen {
    fn one_letter(&self) -> Letter {
        Letter::S(self.base_identity())
    }

    fn b_nf(&self, b: Indexed) -> NormalForm {
        NormalForm::from_parts(
            vec![b],
            self.base_identity(),
            Vec::new(),
            self.base_identity(),
        )
    }

    fn a_nf(&self, a: Indexed) -> NormalForm {
        NormalForm::from_parts(
            Vec::new(),
            self.base_identity(),
            vec![a],
            self.base_identity(),
        )
    }

    pub(crate) fn a_word_nf(&self, u: &[Indexed]) -> NormalForm {
        NormalForm::from_parts(
            Vec::new(),
            self.base_identity(),
            u.to_vec(),
            self.base_identity(),
        )
    }

    pub(crate) fn b_word_nf(&self, v: &[Indexed]) -> NormalForm {
        NormalForm::from_parts(
            v.to_vec(),
            self.base_identity(),
            Vec::new(),
            self.base_identity(),
        )
    }

    /// `b` with `a₁ ⋯ aₙ b = end`, via `a₁ b₁ = end`, `a₂ b₂ = b₁`, …
    fn forward_chain(&self, u: &[Indexed], end: &Letter, skip: u64) -> Indexed {
        let matrix = self.matrix();
        let (first, rest) = u.split_first().expect("non-empty word");
        let mut b = matrix.column_for(first, end, skip);
        for a in rest {
            b = matrix.column_for(a, &Letter::B(b), skip);
        }
        b
    }

    /// `c` with `c b₁ ⋯ bₙ = end`, via `cₙ bₙ = end`, `cₙ₋₁ bₙ₋₁ = cₙ`, …
    pub(super) fn back_chain(&self, v: &[Indexed], end: &Letter, skip: u64) -> Indexed {
        let matrix = self.matrix();
        let (last, rest) = v.split_last().expect("non-empty word");
        let mut c = matrix.row_for(last, end, skip);
        for b in rest.iter().rev() {
            c = matrix.row_for(b, &Letter::A(c), skip);
        }
        c
    }

    /// `λ` with `u λ = 1`.
    pub fn claim1(&self, u: &[Indexed]) -> Result<NormalForm, ByleenError> {
        if u.is_empty() {
            return Ok(self.one());
        }
        let lambda = self.b_nf(self.forward_chain(u, &self.one_letter(), 0));
        if !self.product(&[&self.a_word_nf(u), &lambda]).is_identity() {
            return Err(unverified("claim 1"));
        }
        Ok(lambda)
    }

    /// `μ` with `μ v = 1`.
    pub fn claim4(&self, v: &[Indexed]) -> Result<NormalForm, ByleenError> {
        if v.is_empty() {
            return Ok(self.one());
        }
        let mu = self.a_nf(self.back_chain(v, &self.one_letter(), 0));
        if !self.product(&[&mu, &self.b_word_nf(v)]).is_identity() {
            return Err(unverified("claim 4"));
        }
        Ok(mu)
    }

    /// `λ` and a non-empty `p` with `(u, x) λ = (1, p)` or `(p, 1)`.
    pub fn claim2(
        &self,
        u: &[Indexed],
        x: &[Indexed],
    ) -> Result<(NormalForm, Side, Vec<Indexed>), ByleenError> {
        if u == x {
            return Err(ByleenError::EqualElements);
        }
        let (lambda, side, p) = self.claim2_raw(u, x)?;
        let lu = self.product(&[&self.a_word_nf(u), &lambda]);
        let lx = self.product(&[&self.a_word_nf(x), &lambda]);
        let pn = self.a_word_nf(&p);
        let ok = match side {
            Side::Left => lu.is_identity() && lx == pn,
            Side::Right => lu == pn && lx.is_identity(),
        };
        if p.is_empty() || !ok {
            return Err(unverified("claim 2"));
        }
        Ok((lambda, side, p))
    }

    fn claim2_raw(
        &self,
        u: &[Indexed],
        x: &[Indexed],
    ) -> Result<(NormalForm, Side, Vec<Indexed>), ByleenError> {
        if u.is_empty() {
            return Ok((self.one(), Side::Left, x.to_vec()));
        }
        if x.is_empty() {
            return Ok((self.one(), Side::Right, u.to_vec()));
        }
        let (an, u_rest) = u.split_last().expect("non-empty");
        let (am, x_rest) = x.split_last().expect("non-empty");
        if an == am {
            let l1 = self.claim1(std::slice::from_ref(an))?;
            let (l2, side, p) = self.claim2_raw(u_rest, x_rest)?;
            return Ok((self.product(&[&l1, &l2]), side, p));
        }
        let one = self.one_letter();
        let (b, u_next, x_next) = if u.len() >= x.len() {
            let b = self
                .matrix()
                .find_column(an, am, &Letter::A(an.clone()), &one, 0)?;
            (b, u, x_rest)
        } else {
            let b = self
                .matrix()
                .find_column(an, am, &one, &Letter::A(am.clone()), 0)?;
            (b, u_rest, x)
        };
        let (rest, side, p) = self.claim2_raw(u_next, x_next)?;
        Ok((self.product(&[&self.b_nf(b), &rest]), side, p))
    }

    /// `μ` and a non-empty `q` with `μ (v, y) = (1, q)` or `(q, 1)`.
    pub fn claim5(
        &self,
        v: &[Indexed],
        y: &[Indexed],
    ) -> Result<(NormalForm, Side, Vec<Indexed>), ByleenError> {
        if v == y {
            return Err(ByleenError::EqualElements);
        }
        let (mu, side, q) = self.claim5_raw(v, y)?;
        let mv = self.product(&[&mu, &self.b_word_nf(v)]);
        let my = self.product(&[&mu, &self.b_word_nf(y)]);
        let qn = self.b_word_nf(&q);
        let ok = match side {
            Side::Left => mv.is_identity() && my == qn,
            Side::Right => mv == qn && my.is_identity(),
        };
        if q.is_empty() || !ok {
            return Err(unverified("claim 5"));
        }
        Ok((mu, side, q))
    }

    fn claim5_raw(
        &self,
        v: &[Indexed],
        y: &[Indexed],
    ) -> Result<(NormalForm, Side, Vec<Indexed>), ByleenError> {
        if v.is_empty() {
            return Ok((self.one(), Side::Left, y.to_vec()));
        }
        if y.is_empty() {
            return Ok((self.one(), Side::Right, v.to_vec()));
        }
        let (b1, v_rest) = v.split_first().expect("non-empty");
        let (c1, y_rest) = y.split_first().expect("non-empty");
        if b1 == c1 {
            let m1 = self.claim4(std::slice::from_ref(b1))?;
            let (m2, side, q) = self.claim5_raw(v_rest, y_rest)?;
            return Ok((self.product(&[&m2, &m1]), side, q));
        }
        let one = self.one_letter();
        let (a, v_next, y_next) = if v.len() >= y.len() {
            let a = self
                .matrix()
                .find_row(b1, c1, &Letter::B(b1.clone()), &one, 0)?;
            (a, v, y_rest)
        } else {
            let a = self
                .matrix()
                .find_row(b1, c1, &one, &Letter::B(c1.clone()), 0)?;
            (a, v_rest, y)
        };
        let (rest, side, q) = self.claim5_raw(v_next, y_next)?;
        Ok((self.product(&[&rest, &self.a_nf(a)]), side, q))
    }

    /// `μ`, `λ` with `μ (u, x) λ = (w₁, w₂)` for distinct `A`-words.
    pub fn claim3(
        &self,
        u: &[Indexed],
        x: &[Indexed],
        w1: &Letter,
        w2: &Letter,
    ) -> Result<(NormalForm, NormalForm), ByleenError> {
        let (lambda0, side, p) = self.claim2(u, x)?;
        let b0 = Indexed::new(0u32, self.base_identity());
        let bn = (0..MAX_SKIP)
            .map(|skip| self.forward_chain(&p, &Letter::B(b0.clone()), skip))
            .find(|bn| *bn != b0)
            .ok_or_else(|| unverified("claim 3 chain"))?;
        let a = match side {
            Side::Left => self.matrix().find_row(&bn, &b0, w1, w2, 0)?,
            Side::Right => self.matrix().find_row(&b0, &bn, w1, w2, 0)?,
        };
        let mu = self.a_nf(a);
        let lambda = self.product(&[&lambda0, &self.b_nf(bn)]);
        let got1 = self.product(&[&mu, &self.a_word_nf(u), &lambda]);
        let got2 = self.product(&[&mu, &self.a_word_nf(x), &lambda]);
        if got1 != self.letter(w1) || got2 != self.letter(w2) {
            return Err(unverified("claim 3"));
        }
        Ok((mu, lambda))
    }

    /// `μ`, `λ` with `μ (v, y) λ = (w₁, w₂)` for distinct `B`-words.
    pub fn claim6(
        &self,
        v: &[Indexed],
        y: &[Indexed],
        w1: &Letter,
        w2: &Letter,
    ) -> Result<(NormalForm, NormalForm), ByleenError> {
        let (mu0, side, q) = self.claim5(v, y)?;
        let a0 = Indexed::new(0u32, self.base_identity());
        let c1 = (0..MAX_SKIP)
            .map(|skip| self.back_chain(&q, &Letter::A(a0.clone()), skip))
            .find(|c| *c != a0)
            .ok_or_else(|| unverified("claim 6 chain"))?;
        let b = match side {
            Side::Left => self.matrix().find_column(&c1, &a0, w1, w2, 0)?,
            Side::Right => self.matrix().find_column(&a0, &c1, w1, w2, 0)?,
        };
        let mu = self.product(&[&self.a_nf(c1), &mu0]);
        let lambda = self.b_nf(b);
        let got1 = self.product(&[&mu, &self.b_word_nf(v), &lambda]);
        let got2 = self.product(&[&mu, &self.b_word_nf(y), &lambda]);
        if got1 != self.letter(w1) || got2 != self.letter(w2) {
            return Err(unverified("claim 6"));
        }
        Ok((mu, lambda))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{cyclic_group, trivial};

    fn a(n: u32, s: usize) -> Indexed {
        Indexed::new(n, s)
    }

    #[test]
    fn claim1_cases() {
        let m = Byleen::new(cyclic_group(2)).unwrap();
        assert!(m.claim1(&[]).unwrap().is_identity());
        let lambda = m.claim1(&[a(0, 0)]).unwrap();
        assert_eq!(lambda.v.len(), 1);
        assert_eq!(m.entry(&a(0, 0), &lambda.v[0]), Letter::S(0));
        m.claim1(&[a(0, 1), a(3, 0), a(0, 1)]).unwrap();
    }

    #[test]
    fn claim2_cases() {
        let m = Byleen::new(cyclic_group(2)).unwrap();
        let (lambda, side, p) = m.claim2(&[], &[a(0, 0)]).unwrap();
        assert!(lambda.is_identity());
        assert_eq!(side, Side::Left);
        assert_eq!(p, vec![a(0, 0)]);
        m.claim2(&[a(1, 0)], &[a(2, 0), a(1, 0)]).unwrap();
        m.claim2(&[a(1, 0), a(2, 1)], &[a(2, 0), a(1, 1)]).unwrap();
        m.claim2(&[a(1, 0)], &[a(2, 0), a(3, 1), a(4, 0)]).unwrap();
        assert_eq!(
            m.claim2(&[a(1, 0)], &[a(1, 0)]).unwrap_err(),
            ByleenError::EqualElements
        );
    }

    #[test]
    fn claim3_cases() {
        let m = Byleen::new(cyclic_group(2)).unwrap();
        m.claim3(&[], &[a(0, 0)], &Letter::S(0), &Letter::S(0))
            .unwrap();
        m.claim3(
            &[a(0, 1)],
            &[a(0, 0)],
            &Letter::a(0u32, 0),
            &Letter::b(0u32, 0),
        )
        .unwrap();
        m.claim3(&[a(5, 1), a(0, 0)], &[], &Letter::S(1), &Letter::b(9u32, 1))
            .unwrap();
    }

    #[test]
    fn dual_claims() {
        let m = Byleen::new(trivial()).unwrap();
        assert!(m.claim4(&[]).unwrap().is_identity());
        let mu = m.claim4(&[a(0, 0)]).unwrap();
        assert_eq!(m.entry(&mu.u[0], &a(0, 0)), Letter::S(0));
        m.claim4(&[a(1, 0), a(2, 0), a(1, 0)]).unwrap();
        m.claim5(&[a(1, 0), a(2, 0)], &[a(2, 0)]).unwrap();
        m.claim5(&[a(1, 0)], &[a(1, 0), a(2, 0)]).unwrap();
        m.claim6(&[a(1, 0)], &[], &Letter::a(3u32, 0), &Letter::S(0))
            .unwrap();
        m.claim6(
            &[a(1, 0), a(4, 0)],
            &[a(2, 0)],
            &Letter::b(3u32, 0),
            &Letter::a(1u32, 0),
        )
        .unwrap();
    }
}
