//! Rank computations for finitely generated groups.
//!
//! The crate answers questions of the form "does this finite set generate
//! the group as a *semigroup* (no inverses allowed)?" and "what are the
//! group / semigroup / monoid ranks of this group?" for the families where
//! those questions are decidable:
//!
//! - free groups, via rational-language saturation over the inverse-closed
//!   alphabet ([`automata`]);
//! - finitely generated abelian groups, via Smith normal form and exact
//!   rational feasibility ([`abelian`]);
//! - relatively free groups of a variety and surface groups, via
//!   closed-form rank tables ([`catalog`]);
//! - arbitrary finite presentations, via best-effort bounds with rule
//!   provenance ([`analyzer`]).
//!
//! [`constructions`] produces the generating-set transformations behind
//! these results together with machine-checkable witness tables, and
//! [`words`] supplies the free-group word carrier everything else builds on.

pub mod abelian;
pub mod analyzer;
pub mod automata;
pub mod catalog;
pub mod constructions;
pub mod words;

pub use words::{ReducedWord, Sign, SignedGenerator, Word};
