use std::collections::BTreeSet;

use super::PairSet;
use crate::finite::{Element, FiniteSemigroup};

/// Least subsemigroup of `S × S` containing `Δ` and `generators`.
pub fn diagonal_closure(s: &FiniteSemigroup, generators: &[(Element, Element)]) -> PairSet {
    let n = s.order();
    let mut rho = PairSet::diagonal(n);
    let mut members: Vec<(Element, Element)> = (0..n).map(|x| (x, x)).collect();
    let mut queue = Vec::new();
    for &(x, y) in generators {
        if rho.insert(x, y) {
            members.push((x, y));
            queue.push((x, y));
        }
    }
    while let Some((x, y)) = queue.pop() {
        let snapshot = members.len();
        for k in 0..snapshot {
            let (z, t) = members[k];
            for (a, b) in [(s.mul(x, z), s.mul(y, t)), (s.mul(z, x), s.mul(t, y))] {
                if rho.insert(a, b) {
                    members.push((a, b));
                    queue.push((a, b));
                }
            }
        }
    }
    rho
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (a, b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        true
    }
}

/// Least congruence containing `pairs`.
pub fn congruence_generated(s: &FiniteSemigroup, pairs: &[(Element, Element)]) -> PairSet {
    let n = s.order();
    let mut uf = UnionFind::new(n);
    let mut pending: Vec<(Element, Element)> = pairs.to_vec();
    while let Some((x, y)) = pending.pop() {
        if !uf.union(x, y) {
            continue;
        }
        // Merging x and y forces sx ~ sy and xs ~ ys for every s.
        for t in s.elements() {
            pending.push((s.mul(t, x), s.mul(t, y)));
            pending.push((s.mul(x, t), s.mul(y, t)));
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    let mut rho = PairSet::empty(n);
    for x in 0..n {
        for y in 0..n {
            if roots[x] == roots[y] {
                rho.insert(x, y);
            }
        }
    }
    rho
}

/// Every congruence on `S`, as joins of principal congruences, in
/// increasing order of size and then of pairs.
pub fn all_congruences(s: &FiniteSemigroup) -> Vec<PairSet> {
    let n = s.order();
    let principal: Vec<Vec<(Element, Element)>> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .map(|p| congruence_generated(s, &[p]).pairs())
        .collect();
    let mut found: BTreeSet<Vec<(Element, Element)>> = BTreeSet::new();
    found.insert(PairSet::diagonal(n).pairs());
    let mut frontier: Vec<Vec<(Element, Element)>> = found.iter().cloned().collect();
    while let Some(current) = frontier.pop() {
        for p in &principal {
            let mut generators = current.clone();
            generators.extend_from_slice(p);
            let join = congruence_generated(s, &generators).pairs();
            if found.insert(join.clone()) {
                frontier.push(join);
            }
        }
    }
    let mut out: Vec<PairSet> = found
        .into_iter()
        .map(|pairs| PairSet::from_pairs(n, pairs))
        .collect();
    out.sort_by_key(|c| (c.len(), c.pairs()));
    out
}
