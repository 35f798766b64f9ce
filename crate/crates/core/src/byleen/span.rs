use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::letter::{a_act, b_act, Indexed, Letter};
use super::normal::NormalForm;
use super::{Byleen, ByleenError, Side};

/// Which route a certificate takes through the generating pair
/// `(v s u, y t x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpanCase {
    /// `u = x`, `v = y`, `s ≠ t`: a letter of `A` separates `s` and `t`.
    FaithfulAction,
    /// `u ≠ x`, `v = y`.
    AWordsDiffer,
    /// `u = x`, `v ≠ y`.
    BWordsDiffer,
    /// `u ≠ x`, `v ≠ y`.
    BothDiffer,
    /// The target is the generating pair itself.
    Generator,
    /// A product of single-letter certificates.
    Product,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Factor {
    /// Contributes `(t, t)`.
    Diag(NormalForm),
    /// Contributes the generating pair.
    Gen,
}

/// A product of diagonal pairs and the generating pair, together with the
/// pair it evaluates to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairExpr {
    case: SpanCase,
    generator: (NormalForm, NormalForm),
    factors: Vec<Factor>,
    value: (NormalForm, NormalForm),
}

impl PairExpr {
    pub fn case(&self) -> SpanCase {
        self.case
    }

    pub fn generator(&self) -> &(NormalForm, NormalForm) {
        &self.generator
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn value(&self) -> &(NormalForm, NormalForm) {
        &self.value
    }
}

impl Serialize for PairExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PairExpr", 5)?;
        st.serialize_field("case", &self.case)?;
        st.serialize_field("generator", &[&self.generator.0, &self.generator.1])?;
        st.serialize_field("factors", &self.factors)?;
        st.serialize_field("value", &[&self.value.0, &self.value.1])?;
        st.serialize_field("verified", &true)?;
        st.end()
    }
}

struct Builder(Vec<Factor>);

impl Builder {
    fn diag(&mut self, t: NormalForm) -> &mut Self {
        if !t.is_identity() {
            self.0.push(Factor::Diag(t));
        }
        self
    }

    fn gen(&mut self) -> &mut Self {
        self.0.push(Factor::Gen);
        self
    }
}

impl Byleen {
    /// Evaluates the factors left to right, coordinatewise.
    pub fn evaluate(
        &self,
        generator: &(NormalForm, NormalForm),
        factors: &[Factor],
    ) -> (NormalForm, NormalForm) {
        let mut left: Vec<Letter> = Vec::new();
        let mut right: Vec<Letter> = Vec::new();
        for f in factors {
            let (l, r) = match f {
                Factor::Diag(t) => (t, t),
                Factor::Gen => (&generator.0, &generator.1),
            };
            left.extend(l.letters());
            right.extend(r.letters());
        }
        (self.reduce(&left), self.reduce(&right))
    }

    fn finish(
        &self,
        case: SpanCase,
        generator: (NormalForm, NormalForm),
        factors: Vec<Factor>,
        expected: (NormalForm, NormalForm),
    ) -> Result<PairExpr, ByleenError> {
        let value = self.evaluate(&generator, &factors);
        if value != expected {
            return Err(ByleenError::Unverified(format!(
                "{case:?} certificate evaluates to ({}, {}), not ({}, {})",
                value.0, value.1, expected.0, expected.1
            )));
        }
        Ok(PairExpr {
            case,
            generator,
            factors,
            value,
        })
    }

    fn check_letter(&self, w: &Letter) -> Result<(), ByleenError> {
        if w.base_element() < self.base().order() {
            Ok(())
        } else {
            Err(ByleenError::MatrixMismatch)
        }
    }

    /// A product of diagonal pairs and `(g, h)` equal to `(w₁, w₂)`.
    pub fn span_witness(
        &self,
        g: &NormalForm,
        h: &NormalForm,
        w1: &Letter,
        w2: &Letter,
    ) -> Result<PairExpr, ByleenError> {
        self.check(g)?;
        self.check(h)?;
        self.check_letter(w1)?;
        self.check_letter(w2)?;
        if g == h {
            return Err(ByleenError::EqualElements);
        }
        let base = self.base();
        let e = self.base_identity();
        let a = Indexed::new(0u32, e);
        let (v, s, u) = (&g.v, g.s, &g.u);
        let (y, t, x) = (&h.v, h.s, &h.u);
        let mut out = Builder(Vec::new());
        let case = match (u == x, v == y) {
            (true, true) => {
                let lambda = self.claim1(u)?;
                let mu = self.claim4(v)?;
                let a1 = a_act(base, &a, s);
                let a2 = a_act(base, &a, t);
                let (mu2, lambda2) = self.claim3(&[a1], &[a2], w1, w2)?;
                out.diag(mu2)
                    .diag(self.a_word_nf(&[a]))
                    .diag(mu)
                    .gen()
                    .diag(lambda)
                    .diag(lambda2);
                SpanCase::FaithfulAction
            }
            (false, true) => {
                let mu = self.claim4(v)?;
                let (lambda, side, p) = self.claim2(u, x)?;
                let a1 = a_act(base, &a, s);
                let a2 = a_act(base, &a, t);
                let (first, second) = match side {
                    Side::Left => (vec![a1], prepend(a2, &p)),
                    Side::Right => (prepend(a1, &p), vec![a2]),
                };
                let (mu2, lambda2) = self.claim3(&first, &second, w1, w2)?;
                out.diag(mu2)
                    .diag(self.a_word_nf(&[a]))
                    .diag(mu)
                    .gen()
                    .diag(lambda)
                    .diag(lambda2);
                SpanCase::AWordsDiffer
            }
            (true, false) => {
                let lambda = self.claim1(u)?;
                let (mu, side, q) = self.claim5(v, y)?;
                let b = Indexed::new(0u32, e);
                let b1 = b_act(base, s, &b);
                let b2 = b_act(base, t, &b);
                let (first, second) = match side {
                    Side::Left => (vec![b1], append(&q, b2)),
                    Side::Right => (append(&q, b1), vec![b2]),
                };
                let (mu2, lambda2) = self.claim6(&first, &second, w1, w2)?;
                out.diag(mu2)
                    .diag(mu)
                    .gen()
                    .diag(lambda)
                    .diag(self.b_word_nf(&[b]))
                    .diag(lambda2);
                SpanCase::BWordsDiffer
            }
            (false, false) => {
                let (lambda, p_side, p) = self.claim2(u, x)?;
                let (p1, p2) = match p_side {
                    Side::Left => (Vec::new(), p),
                    Side::Right => (p, Vec::new()),
                };
                let (mu, q_side, q) = self.claim5(v, y)?;
                let c1 = self.back_chain(&q, &Letter::A(a.clone()), 0);
                let (first, second) = match q_side {
                    Side::Left => (
                        prepend(a_act(base, &c1, s), &p1),
                        prepend(a_act(base, &a, t), &p2),
                    ),
                    Side::Right => (
                        prepend(a_act(base, &a, s), &p1),
                        prepend(a_act(base, &c1, t), &p2),
                    ),
                };
                let (mu2, lambda2) = self.claim3(&first, &second, w1, w2)?;
                out.diag(mu2)
                    .diag(self.a_word_nf(&[c1]))
                    .diag(mu)
                    .gen()
                    .diag(lambda)
                    .diag(lambda2);
                SpanCase::BothDiffer
            }
        };
        let expected = (self.letter(w1), self.letter(w2));
        self.finish(case, (g.clone(), h.clone()), out.0, expected)
    }

    /// A product of diagonal pairs and `(g, h)` equal to `(p, q)`, built
    /// from `(w, 1)` for the letters `w` of `p` and `(1, w′)` for those of
    /// `q`.
    pub fn express_pair(
        &self,
        g: &NormalForm,
        h: &NormalForm,
        p: &NormalForm,
        q: &NormalForm,
    ) -> Result<PairExpr, ByleenError> {
        self.check(g)?;
        self.check(h)?;
        self.check(p)?;
        self.check(q)?;
        if g == h {
            return Err(ByleenError::EqualElements);
        }
        let generator = (g.clone(), h.clone());
        let target = (p.clone(), q.clone());
        if target == generator {
            return self.finish(SpanCase::Generator, generator, vec![Factor::Gen], target);
        }
        let one = Letter::S(self.base_identity());
        let mut factors = Vec::new();
        for w in p.letters() {
            factors.extend(self.span_witness(g, h, &w, &one)?.factors);
        }
        for w in q.letters() {
            factors.extend(self.span_witness(g, h, &one, &w)?.factors);
        }
        self.finish(SpanCase::Product, generator, factors, target)
    }
}

fn prepend(first: Indexed, rest: &[Indexed]) -> Vec<Indexed> {
    let mut out = Vec::with_capacity(rest.len() + 1);
    out.push(first);
    out.extend_from_slice(rest);
    out
}

fn append(init: &[Indexed], last: Indexed) -> Vec<Indexed> {
    let mut out = init.to_vec();
    out.push(last);
    out
}
