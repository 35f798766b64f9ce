use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use num_integer::Integer;
use serde::Serialize;

use super::apset::{APSet, Progression};
use super::ModelError;

/// Largest modulus a composite may reach before [`co_compose`] gives up.
pub const MAX_MODULUS: u64 = 1 << 16;

/// Window used by [`co_compose`] to sanity-check every composite.
pub const COMPOSE_CHECK_WINDOW: u64 = 512;

/// An injection `ℕ → ℕ` that is affine on each residue class modulo `M`,
/// `Mq + r ↦ a_r q + b_r`, except on a finite table of patched points.
///
/// The complement `ℕ ∖ image` is carried exactly as an [`APSet`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoInjection {
    modulus: u64,
    pieces: Vec<(u64, u64)>,
    patches: BTreeMap<u64, u64>,
    complement: APSet,
}

impl CoInjection {
    /// Builds the map and checks it is injective, exactly: piece images
    /// pairwise disjoint, patch values distinct and not hit by any
    /// unpatched point.
    pub fn new(
        modulus: u64,
        pieces: Vec<(u64, u64)>,
        patches: BTreeMap<u64, u64>,
    ) -> Result<Self, ModelError> {
        if modulus == 0 || modulus > MAX_MODULUS {
            return Err(ModelError::InvalidMap(format!(
                "modulus {modulus} out of range"
            )));
        }
        if pieces.len() as u64 != modulus {
            return Err(ModelError::InvalidMap(format!(
                "{} pieces for modulus {modulus}",
                pieces.len()
            )));
        }
        if pieces.iter().any(|&(a, _)| a == 0) {
            return Err(ModelError::InvalidMap("slope must be positive".into()));
        }
        for (r, &(a, b)) in pieces.iter().enumerate() {
            for (s, &(c, d)) in pieces.iter().enumerate().skip(r + 1) {
                let meet = APSet::from_start(b, a).intersect(&APSet::from_start(d, c));
                if !meet.is_empty() {
                    return Err(ModelError::InvalidMap(format!(
                        "pieces {r} and {s} overlap"
                    )));
                }
            }
        }
        let mut map = CoInjection {
            modulus,
            pieces,
            patches,
            complement: APSet::empty(),
        };
        let mut seen = HashSet::new();
        for (&k, &v) in &map.patches {
            if !seen.insert(v) {
                return Err(ModelError::InvalidMap(format!("value {v} patched twice")));
            }
            if let Some(other) = map
                .piece_preimage(v)
                .filter(|j| !map.patches.contains_key(j))
            {
                return Err(ModelError::InvalidMap(format!(
                    "{k} and {other} both map to {v}"
                )));
            }
        }
        map.drop_trivial_patches();
        map.complement = map.image()?.complement()?;
        Ok(map)
    }

    /// Assembles a map known to be injective, deriving its complement.
    fn assemble(
        modulus: u64,
        pieces: Vec<(u64, u64)>,
        patches: BTreeMap<u64, u64>,
        complement: Option<APSet>,
    ) -> Result<Self, ModelError> {
        let mut map = CoInjection {
            modulus,
            pieces,
            patches,
            complement: APSet::empty(),
        };
        map.drop_trivial_patches();
        map.reduce_modulus();
        map.complement = match complement {
            Some(c) => c,
            None => map.image()?.complement()?,
        };
        Ok(map)
    }

    pub fn identity() -> Self {
        CoInjection {
            modulus: 1,
            pieces: vec![(1, 0)],
            patches: BTreeMap::new(),
            complement: APSet::empty(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pieces(&self) -> &[(u64, u64)] {
        &self.pieces
    }

    pub fn patches(&self) -> &BTreeMap<u64, u64> {
        &self.patches
    }

    pub fn complement(&self) -> &APSet {
        &self.complement
    }

    /// Member of the Baer–Levi semigroup: the complement contains a full
    /// residue class.
    pub fn in_baer_levi(&self) -> bool {
        self.complement.is_infinite()
    }

    fn piece_value(&self, k: u64) -> Option<u64> {
        let (q, r) = k.div_rem(&self.modulus);
        let (a, b) = self.pieces[r as usize];
        a.checked_mul(q)?.checked_add(b)
    }

    /// The unique `k` whose piece value is `v`, ignoring patches.
    fn piece_preimage(&self, v: u64) -> Option<u64> {
        self.pieces.iter().enumerate().find_map(|(r, &(a, b))| {
            if v >= b && (v - b).is_multiple_of(a) {
                ((v - b) / a)
                    .checked_mul(self.modulus)?
                    .checked_add(r as u64)
            } else {
                None
            }
        })
    }

    /// Panics on arithmetic overflow, which needs inputs near `u64::MAX`.
    pub fn eval(&self, k: u64) -> u64 {
        match self.patches.get(&k) {
            Some(&v) => v,
            None => self.piece_value(k).expect("value overflows u64"),
        }
    }

    /// The unique preimage of `v`, if `v` is in the image.
    pub fn preimage(&self, v: u64) -> Option<u64> {
        if let Some((&k, _)) = self.patches.iter().find(|(_, &w)| w == v) {
            return Some(k);
        }
        self.piece_preimage(v)
            .filter(|k| !self.patches.contains_key(k))
    }

    pub fn in_image(&self, v: u64) -> bool {
        self.preimage(v).is_some()
    }

    /// `ℕ f`, exactly.
    pub fn image(&self) -> Result<APSet, ModelError> {
        self.image_of(&APSet::naturals())
    }

    /// `set · f`, exactly: each residue class is refined to the common
    /// modulus with the pieces, mapped to a progression, and the finite
    /// corrections are settled with the exact preimage test.
    pub fn image_of(&self, set: &APSet) -> Result<APSet, ModelError> {
        let modulus = set
            .progressions()
            .iter()
            .fold(self.modulus, |acc, p| acc.lcm(&p.modulus));
        if modulus > MAX_MODULUS {
            return Err(ModelError::NotClosed(format!(
                "modulus {modulus} too large"
            )));
        }
        let mut bulk = APSet::empty();
        for c in 0..modulus {
            if !set.progressions().iter().any(|p| p.contains(c)) {
                continue;
            }
            let (q0, r) = c.div_rem(&self.modulus);
            let (a, b) = self.pieces[r as usize];
            let start = mul_add(a, q0, b)?;
            let step = a.checked_mul(modulus / self.modulus).ok_or_else(overflow)?;
            bulk = bulk.union(&APSet::from_start(start, step));
        }
        let mut candidates: BTreeSet<u64> = bulk.finite_points();
        for &k in set.finite_points().iter().chain(self.patches.keys()) {
            candidates.insert(self.piece_value(k).ok_or_else(overflow)?);
            candidates.insert(self.eval(k));
        }
        let progressions: Vec<Progression> = bulk.progressions().to_vec();
        Ok(APSet::normalized(progressions, candidates, |v| {
            self.preimage(v).is_some_and(|k| set.member(k))
        }))
    }

    /// Checks injectivity on `[0, window]` and compares the stored
    /// complement with the brute-force image complement on `[0, window]`.
    pub fn validate(&self, window: u64) -> Result<(), ModelError> {
        let mut seen = HashSet::new();
        for k in 0..=window {
            let v = self.eval(k);
            if !seen.insert(v) {
                return Err(ModelError::WindowCheck(format!("value {v} hit twice")));
            }
        }
        // Every unpatched value is at least `q = k div M`, so points above
        // this bound cannot land in the window.
        let max_patch = self.patches.keys().next_back().copied().unwrap_or(0);
        let bound = self
            .modulus
            .saturating_mul(window.saturating_add(1))
            .saturating_add(self.modulus)
            .max(max_patch);
        let mut hit = FixedBitSet::with_capacity(window as usize + 1);
        for k in 0..=bound {
            let v = self.eval(k);
            if v <= window {
                hit.insert(v as usize);
            }
        }
        for v in 0..=window {
            let stored = self.complement.member(v);
            if stored == hit.contains(v as usize) {
                return Err(ModelError::WindowCheck(format!(
                    "complement disagrees at {v}"
                )));
            }
        }
        Ok(())
    }

    fn drop_trivial_patches(&mut self) {
        let trivial: Vec<u64> = self
            .patches
            .iter()
            .filter(|(&k, &v)| self.piece_value(k) == Some(v))
            .map(|(&k, _)| k)
            .collect();
        for k in trivial {
            self.patches.remove(&k);
        }
    }

    /// Replaces the modulus by its smallest divisor that describes the
    /// same pieces.
    fn reduce_modulus(&mut self) {
        let m = self.modulus;
        for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
            let p = m / d;
            let fits = (0..d as usize).all(|r| {
                let (a, b) = self.pieces[r];
                a % p == 0
                    && (0..p).all(|j| {
                        let (aj, bj) = self.pieces[r + (d * j) as usize];
                        aj == a && Some(bj) == (a / p).checked_mul(j).and_then(|t| t.checked_add(b))
                    })
            });
            if fits {
                self.pieces = self.pieces[..d as usize]
                    .iter()
                    .map(|&(a, b)| (a / p, b))
                    .collect();
                self.modulus = d;
                return;
            }
        }
    }
}

fn overflow() -> ModelError {
    ModelError::NotClosed("arithmetic overflow".into())
}

fn mul_add(a: u64, q: u64, b: u64) -> Result<u64, ModelError> {
    a.checked_mul(q)
        .and_then(|x| x.checked_add(b))
        .ok_or_else(overflow)
}

/// The composite "apply `f`, then `g`".
///
/// Over modulus `MN`, `k = MNq + r` maps under `f` to `a N q + c` with
/// `c = a (r div M) + b_{r mod M}`, and then under `g` to
/// `a′ a q + a′ (c div N) + b′_{c mod N}`. The complement is
/// `complement(g) ∪ g(complement(f))`.
pub fn co_compose(f: &CoInjection, g: &CoInjection) -> Result<CoInjection, ModelError> {
    let (m, n) = (f.modulus, g.modulus);
    let modulus = m
        .checked_mul(n)
        .filter(|&l| l <= MAX_MODULUS)
        .ok_or_else(|| ModelError::NotClosed(format!("modulus {m}·{n} too large")))?;
    let mut pieces = Vec::with_capacity(modulus as usize);
    for r in 0..modulus {
        let (a, b) = f.pieces[(r % m) as usize];
        let c = mul_add(a, r / m, b)?;
        let (a2, b2) = g.pieces[(c % n) as usize];
        let slope = a2.checked_mul(a).ok_or_else(overflow)?;
        pieces.push((slope, mul_add(a2, c / n, b2)?));
    }
    let mut patches = BTreeMap::new();
    for (&k, &v) in &f.patches {
        patches.insert(k, g.eval(v));
    }
    for (&v, &w) in &g.patches {
        if let Some(k) = f.piece_preimage(v).filter(|k| !f.patches.contains_key(k)) {
            patches.insert(k, w);
        }
    }
    let complement = g.complement.union(&g.image_of(&f.complement)?);
    let composite = CoInjection::assemble(modulus, pieces, patches, Some(complement))?;
    composite.validate(COMPOSE_CHECK_WINDOW)?;
    Ok(composite)
}

impl fmt::Display for CoInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces: Vec<String> = self
            .pieces
            .iter()
            .enumerate()
            .map(|(r, (a, b))| format!("{}q+{r}↦{a}q+{b}", self.modulus))
            .collect();
        write!(f, "{}", pieces.join(", "))?;
        if !self.patches.is_empty() {
            let patches: Vec<String> = self
                .patches
                .iter()
                .map(|(k, v)| format!("{k}↦{v}"))
                .collect();
            write!(f, "; {}", patches.join(", "))?;
        }
        Ok(())
    }
}
