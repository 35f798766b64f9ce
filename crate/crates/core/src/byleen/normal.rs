use std::fmt;

use serde::{Serialize, Serializer};

use super::letter::{a_act, b_act, Indexed, Letter};
use super::matrix::TwoTransitiveMatrix;
use crate::finite::Element;

/// The unique representative `v s u` with `v ∈ B*`, `s ∈ S`, `u ∈ A*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub v: Vec<Indexed>,
    pub s: Element,
    pub u: Vec<Indexed>,
    identity: Element,
}

impl NormalForm {
    pub fn identity(identity: Element) -> Self {
        NormalForm {
            v: Vec::new(),
            s: identity,
            u: Vec::new(),
            identity,
        }
    }

    /// Callers must pass the identity of the base the letters come from.
    pub fn from_parts(v: Vec<Indexed>, s: Element, u: Vec<Indexed>, identity: Element) -> Self {
        NormalForm { v, s, u, identity }
    }

    pub fn is_identity(&self) -> bool {
        self.v.is_empty() && self.u.is_empty() && self.s == self.identity
    }

    pub fn base_identity(&self) -> Element {
        self.identity
    }

    /// The word `v s u`, with `s` dropped when it is the identity.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self.v.iter().cloned().map(Letter::B).collect();
        if self.s != self.identity {
            out.push(Letter::S(self.s));
        }
        out.extend(self.u.iter().cloned().map(Letter::A));
        out
    }

    pub fn len(&self) -> usize {
        self.v.len() + self.u.len() + usize::from(self.s != self.identity)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Some(w)` if this is the single letter `w`.
    pub fn as_letter(&self) -> Option<Letter> {
        let letters = self.letters();
        match letters.as_slice() {
            [w] => Some(w.clone()),
            [] => Some(Letter::S(self.identity)),
            _ => None,
        }
    }

    pub fn max_base_element(&self) -> Element {
        self.v
            .iter()
            .chain(&self.u)
            .map(|x| x.s)
            .chain([self.s, self.identity])
            .max()
            .unwrap_or(0)
    }
}

/// The relation, if any, rewriting the factor `x y` to a single letter.
pub fn rewrite_pair(matrix: &TwoTransitiveMatrix, x: &Letter, y: &Letter) -> Option<Letter> {
    let base = matrix.base();
    match (x, y) {
        (Letter::A(a), Letter::S(s)) => Some(Letter::A(a_act(base, a, *s))),
        (Letter::A(a), Letter::B(b)) => Some(matrix.entry(a, b)),
        (Letter::S(s), Letter::B(b)) => Some(Letter::B(b_act(base, *s, b))),
        (Letter::S(s), Letter::S(t)) => Some(Letter::S(base.mul(*s, *t))),
        _ => None,
    }
}

/// Stack reduction: each incoming letter is merged with the top of the
/// stack while a relation applies, identity letters are deleted.
pub fn reduce(matrix: &TwoTransitiveMatrix, word: &[Letter]) -> NormalForm {
    let identity = matrix.identity();
    let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
    for letter in word {
        let mut x = letter.clone();
        loop {
            if x == Letter::S(identity) {
                break;
            }
            match stack.last().and_then(|top| rewrite_pair(matrix, top, &x)) {
                Some(merged) => {
                    stack.pop();
                    x = merged;
                }
                None => {
                    stack.push(x);
                    break;
                }
            }
        }
    }
    assemble(stack, identity)
}

/// Splits an irreducible word into its `B`, `S` and `A` parts.
pub(crate) fn assemble(stack: Vec<Letter>, identity: Element) -> NormalForm {
    let mut nf = NormalForm::identity(identity);
    for letter in stack {
        match letter {
            Letter::B(b) => {
                debug_assert!(nf.u.is_empty() && nf.s == identity, "B after S or A");
                nf.v.push(b);
            }
            Letter::S(s) => {
                debug_assert!(nf.u.is_empty() && nf.s == identity, "S after S or A");
                nf.s = s;
            }
            Letter::A(a) => nf.u.push(a),
        }
    }
    nf
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.letters();
        if letters.is_empty() {
            return write!(f, "1");
        }
        let words: Vec<String> = letters.iter().map(Letter::to_string).collect();
        write!(f, "{}", words.join(" "))
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
