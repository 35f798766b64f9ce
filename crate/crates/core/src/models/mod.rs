//! Exact models of infinite semigroups that appear as (counter)examples:
//! the bicyclic monoid and its natural order, Bruck–Reilly extensions over
//! finite monoids, the integers under addition, and a countable Baer–Levi
//! semigroup of residue-affine injections `ℕ → ℕ`.

mod apset;
mod baer_levi;
mod bicyclic;
mod bruck_reilly;
mod coinjection;
mod integers;

use thiserror::Error;

pub use apset::{APSet, Progression};
pub use baer_levi::{
    baer_levi_related, baer_levi_witness, shares_b_prime, witness_f, witness_g, witness_h,
    BaerLeviWitness, PairReport,
};
pub use bicyclic::{bicyclic_leq, bicyclic_leq_by_search, bicyclic_mul, Bicyclic};
pub use bruck_reilly::{br_mul, br_order_member, br_project, BrElement, EndomorphismTable};
pub use coinjection::{co_compose, CoInjection, COMPOSE_CHECK_WINDOW, MAX_MODULUS};
pub use integers::zdiag_member;

/// Default bound for window checks on co-injections.
pub const DEFAULT_WINDOW: u64 = 10_000;

/// Environment variable overriding [`DEFAULT_WINDOW`].
pub const WINDOW_ENV: &str = "SG_WINDOW";

/// [`DEFAULT_WINDOW`], or the value of `SG_WINDOW` when it parses.
pub fn window_from_env() -> u64 {
    std::env::var(WINDOW_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_WINDOW)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("operands belong to Bruck–Reilly extensions with different endomorphisms")]
    ThetaMismatch,
    #[error("map is not an endomorphism: θ({x}·{y}) ≠ θ({x})·θ({y})")]
    NotEndomorphism { x: usize, y: usize },
    #[error("endomorphism must fix the identity")]
    IdentityNotFixed,
    #[error("base semigroup is not a monoid")]
    NotMonoid,
    #[error("element {0} is out of range")]
    OutOfRange(usize),
    #[error("composite leaves the representable class: {0}")]
    NotClosed(String),
    #[error("invalid residue-affine map: {0}")]
    InvalidMap(String),
    #[error("window check failed: {0}")]
    WindowCheck(String),
}
