use super::structure::is_group;
use super::{Element, FiniteError, FiniteSemigroup};

/// Data of a Rees matrix semigroup `M[G; I, J; P]` with `P` a `J × I`
/// matrix over `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesSpec {
    group: FiniteSemigroup,
    i_size: usize,
    j_size: usize,
    sandwich: Vec<Vec<Element>>,
}

impl ReesSpec {
    pub fn new(
        group: FiniteSemigroup,
        i_size: usize,
        j_size: usize,
        sandwich: Vec<Vec<Element>>,
    ) -> Result<Self, FiniteError> {
        if !is_group(&group) {
            return Err(FiniteError::NotAGroup);
        }
        if i_size == 0 || j_size == 0 {
            return Err(FiniteError::EmptyIndexSet);
        }
        if sandwich.len() != j_size || sandwich.iter().any(|row| row.len() != i_size) {
            return Err(FiniteError::SandwichShape {
                rows: j_size,
                cols: i_size,
            });
        }
        if let Some(&bad) = sandwich.iter().flatten().find(|&&g| g >= group.order()) {
            return Err(FiniteError::ElementOutOfRange(bad));
        }
        Ok(ReesSpec {
            group,
            i_size,
            j_size,
            sandwich,
        })
    }

    pub fn group(&self) -> &FiniteSemigroup {
        &self.group
    }

    pub fn i_size(&self) -> usize {
        self.i_size
    }

    pub fn j_size(&self) -> usize {
        self.j_size
    }

    /// Index of `(i, g, j)` in the constructed semigroup.
    pub fn index(&self, i: usize, g: Element, j: usize) -> Element {
        (i * self.group.order() + g) * self.j_size + j
    }

    /// Inverse of [`ReesSpec::index`].
    pub fn triple(&self, x: Element) -> (usize, Element, usize) {
        let j = x % self.j_size;
        let rest = x / self.j_size;
        (rest / self.group.order(), rest % self.group.order(), j)
    }
}

/// `(i, g, j)(k, h, l) = (i, g p_{jk} h, l)` on `I × G × J`.
pub fn rees_matrix(spec: &ReesSpec) -> Result<FiniteSemigroup, FiniteError> {
    let g = &spec.group;
    let order = spec.i_size * g.order() * spec.j_size;
    let names = (0..order)
        .map(|x| {
            let (i, a, j) = spec.triple(x);
            format!("({i},{},{j})", g.name(a))
        })
        .collect();
    let s = FiniteSemigroup::from_fn(order, names, |x, y| {
        let (i, a, j) = spec.triple(x);
        let (k, b, l) = spec.triple(y);
        let middle = g.mul(g.mul(a, spec.sandwich[j][k]), b);
        spec.index(i, middle, l)
    })?;
    Ok(s)
}

/// The sandwich semigroup on the carrier of `S` with `x ∘ y = x a y`.
pub fn sandwich(s: &FiniteSemigroup, a: Element) -> Result<FiniteSemigroup, FiniteError> {
    if a >= s.order() {
        return Err(FiniteError::ElementOutOfRange(a));
    }
    let out =
        FiniteSemigroup::from_fn(s.order(), s.names().to_vec(), |x, y| s.mul(s.mul(x, a), y))?;
    Ok(out)
}
