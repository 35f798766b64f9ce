//! Decision procedures and certificates for semigroups in which every
//! diagonal subsemigroup of `S × S` is a congruence ("DSC" semigroups).
//!
//! The crate is split by the kind of object being computed with:
//!
//! * [`finite`]: finite semigroups as Cayley tables, Green's relations,
//!   structural predicates, standard constructions, quotients and exhaustive
//!   enumeration of small tables.
//! * [`relations`]: pair sets over a finite semigroup, closures, congruence
//!   axioms, the exhaustive and the fast DSC decision, non-DSC witnesses.
//! * [`models`]: exact executable models of infinite semigroups (bicyclic
//!   monoid, Bruck–Reilly extensions, the integers, a countable Baer–Levi
//!   semigroup built from residue-affine injections).
//! * [`byleen`]: Byleen's monoid `C¹(S; α, β; P)` over a finite base monoid,
//!   with a lazily resolved 2-transitive sandwich matrix, normal-form
//!   arithmetic and verified certificates that any diagonal subsemigroup
//!   strictly above the diagonal is everything.
//! * [`cli`]: report-producing commands backing the `sg` binary.

pub mod byleen;
pub mod cli;
pub mod finite;
pub mod models;
pub mod relations;

pub use finite::{CayleyError, FiniteError, FiniteSemigroup};
pub use relations::{AxiomReport, PairSet};
