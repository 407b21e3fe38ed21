//! Decision procedures for Kleene algebra with tests (KAT).
//!
//! Two KAT expressions are compared through their guarded-string languages:
//! partial derivatives turn each expression into a finite nondeterministic
//! automaton, and [`equiv::Checker`] searches for a bisimulation between the
//! two, returning the shortest distinguishing guarded string when none exists.
//!
//! On top of that sit hypothesis elimination ([`hyp`]) for the standard
//! reducible shapes (Hoare equations, guard commutation, guard absorption,
//! test (in)equalities and letter absorption) and an embedding of `while`
//! programs and Hoare triples ([`whilelang`]).
//!
//! [`semantics`] holds the ground truth used to cross-check everything else:
//! a brute-force bounded guarded-string language and a finite relational
//! model. It never calls into the derivative machinery.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod deriv;
pub mod equiv;
pub mod hyp;
pub mod semantics;
pub mod syntax;
pub mod whilelang;

pub use deriv::ExprSet;
pub use equiv::{Checker, Side, StateLimitExceeded, Verdict, DEFAULT_MAX_STATES};
pub use hyp::{Comparison, Equation, Hypothesis};
pub use semantics::{Atom, GuardedString};
pub use syntax::{BoolExpr, KatExpr, LetterId, Signature, SignatureError, TestId};
pub use whilelang::{HoareTriple, Prog};
