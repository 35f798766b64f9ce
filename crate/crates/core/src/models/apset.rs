use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::ModelError;

/// Largest common modulus [`APSet::complement`] will expand into.
const MAX_COMPLEMENT_MODULUS: u64 = 1 << 20;

/// The residue class `{n ∈ ℕ : n ≡ residue (mod modulus)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Progression {
    pub modulus: u64,
    pub residue: u64,
}

impl Progression {
    /// Panics if `modulus` is zero.
    pub fn new(modulus: u64, residue: u64) -> Self {
        assert!(modulus > 0, "progression modulus must be positive");
        Progression {
            modulus,
            residue: residue % modulus,
        }
    }

    pub fn contains(&self, n: u64) -> bool {
        n % self.modulus == self.residue
    }

    /// `self ⊆ other`.
    pub fn is_within(&self, other: &Progression) -> bool {
        self.modulus.is_multiple_of(other.modulus) && self.residue % other.modulus == other.residue
    }

    /// Chinese remaindering: the common residue class, if the two classes
    /// meet.
    pub fn intersect(&self, other: &Progression) -> Option<Progression> {
        let (m1, r1) = (self.modulus as i128, self.residue as i128);
        let (m2, r2) = (other.modulus as i128, other.residue as i128);
        let egcd = m1.extended_gcd(&m2);
        let g = egcd.gcd;
        if (r2 - r1) % g != 0 {
            return None;
        }
        let lcm = m1 / g * m2;
        // r1 + m1 * t ≡ r2 (mod m2), with t = x (r2 − r1) / g.
        let t = (egcd.x * ((r2 - r1) / g)).rem_euclid(m2 / g);
        let r = (r1 + m1 * t).rem_euclid(lcm);
        Some(Progression::new(lcm as u64, r as u64))
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n≡{} mod {}", self.residue, self.modulus)
    }
}

/// A subset of ℕ: a finite union of residue classes, with finitely many
/// points added and finitely many removed.
///
/// `n ∈ A ⟺ (n matches a progression ∨ n ∈ plus) ∧ n ∉ minus`. Values are
/// kept normalized: no progression is contained in another, `plus` holds
/// only points outside every progression and `minus` only points inside
/// one, so equal sets have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct APSet {
    progressions: Vec<Progression>,
    plus: BTreeSet<u64>,
    minus: BTreeSet<u64>,
}

impl APSet {
    pub fn empty() -> Self {
        APSet {
            progressions: Vec::new(),
            plus: BTreeSet::new(),
            minus: BTreeSet::new(),
        }
    }

    pub fn naturals() -> Self {
        Self::progression(1, 0)
    }

    pub fn progression(modulus: u64, residue: u64) -> Self {
        APSet {
            progressions: vec![Progression::new(modulus, residue)],
            plus: BTreeSet::new(),
            minus: BTreeSet::new(),
        }
    }

    pub fn points(points: impl IntoIterator<Item = u64>) -> Self {
        APSet {
            progressions: Vec::new(),
            plus: points.into_iter().collect(),
            minus: BTreeSet::new(),
        }
    }

    /// `{start + step·t : t ≥ 0}`.
    pub fn from_start(start: u64, step: u64) -> Self {
        let p = Progression::new(step, start);
        let below = (p.residue..start).step_by(step as usize);
        Self::normalized(vec![p], below.collect(), |n| {
            n >= start && (n - start).is_multiple_of(step)
        })
    }

    pub fn new(
        progressions: Vec<Progression>,
        plus: BTreeSet<u64>,
        minus: BTreeSet<u64>,
    ) -> Result<Self, ModelError> {
        if let Some(x) = plus.intersection(&minus).next() {
            return Err(ModelError::InvalidMap(format!(
                "{x} is both added and removed"
            )));
        }
        let raw = APSet {
            progressions,
            plus,
            minus,
        };
        let candidates = raw.finite_points();
        Ok(Self::normalized(
            raw.progressions.clone(),
            candidates,
            |n| raw.member(n),
        ))
    }

    /// Builds the normalized set whose members agree with the progressions
    /// except on `candidates`, where `member` decides.
    pub(crate) fn normalized(
        mut progressions: Vec<Progression>,
        candidates: BTreeSet<u64>,
        member: impl Fn(u64) -> bool,
    ) -> Self {
        progressions.sort();
        progressions.dedup();
        let kept: Vec<Progression> = progressions
            .iter()
            .enumerate()
            .filter(|(i, p)| {
                !progressions
                    .iter()
                    .enumerate()
                    .any(|(j, q)| j != *i && p.is_within(q) && (q != *p))
            })
            .map(|(_, p)| *p)
            .collect();
        let mut plus = BTreeSet::new();
        let mut minus = BTreeSet::new();
        for n in candidates {
            let covered = kept.iter().any(|p| p.contains(n));
            match (covered, member(n)) {
                (true, false) => {
                    minus.insert(n);
                }
                (false, true) => {
                    plus.insert(n);
                }
                _ => {}
            }
        }
        APSet {
            progressions: kept,
            plus,
            minus,
        }
    }

    pub fn progressions(&self) -> &[Progression] {
        &self.progressions
    }

    pub fn plus(&self) -> &BTreeSet<u64> {
        &self.plus
    }

    pub fn minus(&self) -> &BTreeSet<u64> {
        &self.minus
    }

    pub(crate) fn finite_points(&self) -> BTreeSet<u64> {
        self.plus.union(&self.minus).copied().collect()
    }

    pub fn member(&self, n: u64) -> bool {
        !self.minus.contains(&n)
            && (self.plus.contains(&n) || self.progressions.iter().any(|p| p.contains(n)))
    }

    /// Every progression is infinite and only finitely many points are
    /// removed, so the set is empty iff nothing survives normalization.
    pub fn is_empty(&self) -> bool {
        self.progressions.is_empty() && self.plus.is_empty()
    }

    pub fn is_infinite(&self) -> bool {
        !self.progressions.is_empty()
    }

    pub fn intersect(&self, other: &APSet) -> APSet {
        let progressions = self
            .progressions
            .iter()
            .flat_map(|p| {
                other
                    .progressions
                    .iter()
                    .filter_map(move |q| p.intersect(q))
            })
            .collect();
        let candidates = self
            .finite_points()
            .union(&other.finite_points())
            .copied()
            .collect();
        Self::normalized(progressions, candidates, |n| {
            self.member(n) && other.member(n)
        })
    }

    pub fn union(&self, other: &APSet) -> APSet {
        let progressions = self
            .progressions
            .iter()
            .chain(&other.progressions)
            .copied()
            .collect();
        let candidates = self
            .finite_points()
            .union(&other.finite_points())
            .copied()
            .collect();
        Self::normalized(progressions, candidates, |n| {
            self.member(n) || other.member(n)
        })
    }

    /// `ℕ ∖ A`, expanded over the least common modulus of the progressions.
    pub fn complement(&self) -> Result<APSet, ModelError> {
        let mut modulus: u64 = 1;
        for p in &self.progressions {
            modulus = modulus.lcm(&p.modulus);
            if modulus > MAX_COMPLEMENT_MODULUS {
                return Err(ModelError::NotClosed(format!(
                    "complement needs modulus above {MAX_COMPLEMENT_MODULUS}"
                )));
            }
        }
        let progressions = (0..modulus)
            .filter(|&r| !self.progressions.iter().any(|p| p.contains(r)))
            .map(|r| Progression::new(modulus, r))
            .collect();
        Ok(Self::normalized(progressions, self.finite_points(), |n| {
            !self.member(n)
        }))
    }

    /// Exact test of `{n ≡ r (mod m)} ⊆ A`.
    pub fn contains_progression(&self, p: &Progression) -> bool {
        if self.minus.iter().any(|&n| p.contains(n)) {
            return false;
        }
        let modulus = self
            .progressions
            .iter()
            .fold(p.modulus, |acc, q| acc.lcm(&q.modulus));
        (0..modulus / p.modulus)
            .map(|t| p.residue + t * p.modulus)
            .all(|r| self.progressions.iter().any(|q| q.contains(r)))
    }

    /// Members below `limit`, increasing.
    pub fn members_below(&self, limit: u64) -> Vec<u64> {
        (0..limit).filter(|&n| self.member(n)).collect()
    }
}

impl fmt::Display for APSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .progressions
            .iter()
            .map(|p| format!("{{{p}}}"))
            .collect();
        if !self.plus.is_empty() {
            let pts: Vec<String> = self.plus.iter().map(u64::to_string).collect();
            parts.push(format!("{{{}}}", pts.join(",")));
        }
        if parts.is_empty() {
            parts.push("∅".into());
        }
        write!(f, "{}", parts.join(" ∪ "))?;
        if !self.minus.is_empty() {
            let pts: Vec<String> = self.minus.iter().map(u64::to_string).collect();
            write!(f, " ∖ {{{}}}", pts.join(","))?;
        }
        Ok(())
    }
}
