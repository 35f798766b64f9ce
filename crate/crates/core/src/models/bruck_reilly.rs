use std::sync::Arc;

use super::bicyclic::{bicyclic_leq, Bicyclic};
use super::ModelError;
use crate::finite::{Element, FiniteSemigroup};

/// An endomorphism `θ` of a finite monoid, with its powers precomputed up
/// to the point where the sequence `θ⁰, θ¹, …` becomes periodic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndomorphismTable {
    base: FiniteSemigroup,
    identity: Element,
    map: Vec<Element>,
    powers: Vec<Vec<Element>>,
    cycle_start: usize,
}

impl EndomorphismTable {
    pub fn new(base: FiniteSemigroup, map: Vec<Element>) -> Result<Self, ModelError> {
        let identity = base.identity().ok_or(ModelError::NotMonoid)?;
        if map.len() != base.order() {
            return Err(ModelError::InvalidMap(format!(
                "map has {} entries for a base of order {}",
                map.len(),
                base.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= base.order()) {
            return Err(ModelError::OutOfRange(bad));
        }
        for x in base.elements() {
            for y in base.elements() {
                if map[base.mul(x, y)] != base.mul(map[x], map[y]) {
                    return Err(ModelError::NotEndomorphism { x, y });
                }
            }
        }
        if map[identity] != identity {
            return Err(ModelError::IdentityNotFixed);
        }

        let mut powers: Vec<Vec<Element>> = vec![base.elements().collect()];
        let cycle_start = loop {
            let last = powers.last().expect("non-empty");
            let next: Vec<Element> = last.iter().map(|&x| map[x]).collect();
            if let Some(j) = powers.iter().position(|p| *p == next) {
                break j;
            }
            powers.push(next);
        };
        Ok(EndomorphismTable {
            base,
            identity,
            map,
            powers,
            cycle_start,
        })
    }

    /// `θ ≡ 1`.
    pub fn constant_identity(base: FiniteSemigroup) -> Result<Self, ModelError> {
        let identity = base.identity().ok_or(ModelError::NotMonoid)?;
        let map = vec![identity; base.order()];
        Self::new(base, map)
    }

    pub fn identity_map(base: FiniteSemigroup) -> Result<Self, ModelError> {
        let map = base.elements().collect();
        Self::new(base, map)
    }

    pub fn base(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    /// `x θ^k`.
    pub fn power(&self, x: Element, k: u64) -> Element {
        let len = self.powers.len() as u64;
        let idx = if k < len {
            k
        } else {
            let start = self.cycle_start as u64;
            start + (k - start) % (len - start)
        };
        self.powers[idx as usize][x]
    }
}

/// Element `(m, s, n)` of `BR(S, θ)`.
#[derive(Debug, Clone)]
pub struct BrElement {
    pub m: u64,
    pub s: Element,
    pub n: u64,
    theta: Arc<EndomorphismTable>,
}

impl PartialEq for BrElement {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
            && self.s == other.s
            && self.n == other.n
            && same_theta(&self.theta, &other.theta)
    }
}

impl Eq for BrElement {}

fn same_theta(a: &Arc<EndomorphismTable>, b: &Arc<EndomorphismTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl BrElement {
    pub fn new(
        theta: &Arc<EndomorphismTable>,
        m: u64,
        s: Element,
        n: u64,
    ) -> Result<Self, ModelError> {
        if s >= theta.base().order() {
            return Err(ModelError::OutOfRange(s));
        }
        Ok(BrElement {
            m,
            s,
            n,
            theta: Arc::clone(theta),
        })
    }

    /// `(0, 1, 0)`.
    pub fn identity(theta: &Arc<EndomorphismTable>) -> Self {
        BrElement {
            m: 0,
            s: theta.identity(),
            n: 0,
            theta: Arc::clone(theta),
        }
    }

    pub fn theta(&self) -> &Arc<EndomorphismTable> {
        &self.theta
    }
}

/// `(m, s, n)(p, t, q) = (m − n + k, (s θ^{k−n})(t θ^{k−p}), q − p + k)`
/// with `k = max(n, p)`.
pub fn br_mul(x: &BrElement, y: &BrElement) -> Result<BrElement, ModelError> {
    if !same_theta(&x.theta, &y.theta) {
        return Err(ModelError::ThetaMismatch);
    }
    let theta = &x.theta;
    let k = x.n.max(y.m);
    let left = theta.power(x.s, k - x.n);
    let right = theta.power(y.s, k - y.m);
    Ok(BrElement {
        m: x.m + (k - x.n),
        s: theta.base().mul(left, right),
        n: y.n + (k - y.m),
        theta: Arc::clone(theta),
    })
}

/// Projection onto the first and third coordinates.
pub fn br_project(x: &BrElement) -> Bicyclic {
    Bicyclic::new(x.m, x.n)
}

/// Pullback of the bicyclic natural order along [`br_project`].
pub fn br_order_member(x: &BrElement, y: &BrElement) -> bool {
    bicyclic_leq(br_project(x), br_project(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{cyclic_group, left_zero};

    fn c2_constant() -> Arc<EndomorphismTable> {
        Arc::new(EndomorphismTable::constant_identity(cyclic_group(2)).unwrap())
    }

    #[test]
    fn multiplication_example() {
        let theta = c2_constant();
        let (one, g) = (0, 1);
        let x = BrElement::new(&theta, 1, g, 2).unwrap();
        let y = BrElement::new(&theta, 1, one, 3).unwrap();
        assert_eq!(
            br_mul(&x, &y).unwrap(),
            BrElement::new(&theta, 1, g, 4).unwrap()
        );
    }

    #[test]
    fn identity_is_neutral() {
        let theta = c2_constant();
        let x = BrElement::new(&theta, 3, 1, 2).unwrap();
        let e = BrElement::identity(&theta);
        assert_eq!(br_mul(&e, &x).unwrap(), x);
        assert_eq!(br_mul(&x, &e).unwrap(), x);
    }

    #[test]
    fn projection_example() {
        let theta = c2_constant();
        let x = BrElement::new(&theta, 1, 1, 2).unwrap();
        let y = BrElement::new(&theta, 0, 1, 5).unwrap();
        let xy = br_mul(&x, &y).unwrap();
        assert_eq!(br_project(&xy), Bicyclic::new(1, 7));
        assert_eq!(br_project(&x) * br_project(&y), Bicyclic::new(1, 7));
    }

    #[test]
    fn pulled_back_order() {
        let theta = c2_constant();
        let x = BrElement::new(&theta, 1, 1, 1).unwrap();
        let e = BrElement::identity(&theta);
        assert!(br_order_member(&x, &e));
        assert!(!br_order_member(&e, &x));
        assert!(br_order_member(&x, &x));
    }

    #[test]
    fn mismatched_theta_is_rejected() {
        let a = c2_constant();
        let b = Arc::new(EndomorphismTable::identity_map(cyclic_group(2)).unwrap());
        let x = BrElement::identity(&a);
        let y = BrElement::identity(&b);
        assert_eq!(br_mul(&x, &y).unwrap_err(), ModelError::ThetaMismatch);
    }

    #[test]
    fn endomorphism_validation() {
        assert_eq!(
            EndomorphismTable::identity_map(left_zero(2)).unwrap_err(),
            ModelError::NotMonoid
        );
        // g ↦ e, e ↦ g is not a homomorphism of C₂.
        assert!(matches!(
            EndomorphismTable::new(cyclic_group(2), vec![1, 0]),
            Err(ModelError::NotEndomorphism { .. })
        ));
    }

    #[test]
    fn powers_are_periodic() {
        // Multiplication by 2 on C₃ is an automorphism of order 2.
        let theta = EndomorphismTable::new(cyclic_group(3), vec![0, 2, 1]).unwrap();
        assert_eq!(theta.power(1, 0), 1);
        assert_eq!(theta.power(1, 1), 2);
        assert_eq!(theta.power(1, 2), 1);
        assert_eq!(theta.power(1, 1001), 2);
    }
}
