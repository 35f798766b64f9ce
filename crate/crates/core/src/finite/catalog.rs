use itertools::Itertools;

use super::FiniteSemigroup;

/// The one-element monoid.
pub fn trivial() -> FiniteSemigroup {
    cyclic_group(1)
}

/// The cyclic group of order `n` on `{e, g, g^2, …}`, with `g^i · g^j = g^(i+j mod n)`.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    assert!(n > 0, "cyclic group order must be positive");
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    FiniteSemigroup::from_fn(n, names, |i, j| (i + j) % n).expect("cyclic group is associative")
}

/// Left-zero semigroup: `ab = a`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, letter_names(n), |i, _| i).expect("left zero is associative")
}

/// Right-zero semigroup: `ab = b`.
pub fn right_zero(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, letter_names(n), |_, j| j).expect("right zero is associative")
}

/// The two-element semilattice `{0, 1}` under `min`.
pub fn min_semilattice() -> FiniteSemigroup {
    FiniteSemigroup::from_rows(&[vec![0, 0], vec![0, 1]]).expect("min is associative")
}

/// Klein four-group `C₂ × C₂`.
pub fn klein_four() -> FiniteSemigroup {
    let names = ["e", "a", "b", "c"].map(String::from).to_vec();
    FiniteSemigroup::from_fn(4, names, |i, j| i ^ j).expect("xor is associative")
}

/// Symmetric group on `{1, …, n}` under "apply left argument first".
pub fn symmetric_group(n: usize) -> FiniteSemigroup {
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    let names = perms
        .iter()
        .map(|p| {
            let images: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
            format!("[{}]", images.join(""))
        })
        .collect();
    FiniteSemigroup::from_fn(perms.len(), names, |i, j| {
        let composed: Vec<usize> = perms[i].iter().map(|&x| perms[j][x]).collect();
        index(&composed)
    })
    .expect("composition is associative")
}

/// Direct product with coordinatewise multiplication; `(x, y)` has index
/// `x * |t| + y`.
pub fn direct_product(s: &FiniteSemigroup, t: &FiniteSemigroup) -> FiniteSemigroup {
    let m = t.order();
    let names = s
        .elements()
        .cartesian_product(t.elements())
        .map(|(x, y)| format!("({},{})", s.name(x), t.name(y)))
        .collect();
    FiniteSemigroup::from_fn(s.order() * m, names, |i, j| {
        s.mul(i / m, j / m) * m + t.mul(i % m, j % m)
    })
    .expect("products of semigroups are semigroups")
}

fn letter_names(n: usize) -> Vec<String> {
    const LETTERS: &[u8] = b"xyzwuv";
    (0..n)
        .map(|i| match LETTERS.get(i) {
            Some(&c) => (c as char).to_string(),
            None => format!("x{i}"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        assert_eq!(trivial().order(), 1);
        assert_eq!(cyclic_group(6).order(), 6);
        assert_eq!(symmetric_group(3).order(), 6);
        assert_eq!(
            direct_product(&cyclic_group(2), &cyclic_group(3)).order(),
            6
        );
        assert_eq!(left_zero(2).names(), &["x".to_string(), "y".to_string()]);
    }

    #[test]
    fn symmetric_group_is_not_commutative() {
        let s3 = symmetric_group(3);
        let commutes = s3
            .elements()
            .all(|x| s3.elements().all(|y| s3.mul(x, y) == s3.mul(y, x)));
        assert!(!commutes);
    }
}
