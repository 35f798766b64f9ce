use itertools::Itertools;

use super::{FiniteError, FiniteSemigroup};

/// Largest degree accepted by [`generate_symmetric_inverse`].
pub const MAX_SYMMETRIC_INVERSE: usize = 3;

/// A partial injection on `{0, …, n-1}`: `image[x]` is `Some(y)` on the
/// domain and `None` elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialInjection {
    pub image: Vec<Option<usize>>,
}

impl PartialInjection {
    pub fn domain(&self) -> Vec<usize> {
        (0..self.image.len())
            .filter(|&x| self.image[x].is_some())
            .collect()
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &PartialInjection) -> PartialInjection {
        PartialInjection {
            image: self
                .image
                .iter()
                .map(|y| y.and_then(|y| other.image[y]))
                .collect(),
        }
    }

    /// Display like `{1:2,2:1}` with points counted from 1.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .image
            .iter()
            .enumerate()
            .filter_map(|(x, y)| y.map(|y| format!("{}:{}", x + 1, y + 1)))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn all_partial_injections(n: usize) -> Vec<PartialInjection> {
    let mut out = Vec::new();
    // Domains in increasing bitmask order, images in lexicographic order.
    for mask in 0u32..(1 << n) {
        let domain: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
        for targets in (0..n).permutations(domain.len()) {
            let mut image = vec![None; n];
            for (&x, &y) in domain.iter().zip(&targets) {
                image[x] = Some(y);
            }
            out.push(PartialInjection { image });
        }
    }
    out
}

/// The symmetric inverse monoid `I_n`: all partial injections of an
/// `n`-element set under composition, left argument applied first.
pub fn generate_symmetric_inverse(n: usize) -> Result<FiniteSemigroup, FiniteError> {
    if n > MAX_SYMMETRIC_INVERSE {
        return Err(FiniteError::TooLarge {
            n,
            max: MAX_SYMMETRIC_INVERSE,
        });
    }
    let maps = all_partial_injections(n);
    let names = maps.iter().map(PartialInjection::label).collect();
    let index = |p: &PartialInjection| maps.iter().position(|q| q == p).expect("closed");
    let s = FiniteSemigroup::from_fn(maps.len(), names, |i, j| index(&maps[i].then(&maps[j])))?;
    Ok(s)
}
