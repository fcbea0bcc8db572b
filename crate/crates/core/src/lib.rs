//! Decision procedures for isomorphism of classical propositional formulas.
//!
//! Two notions are decided:
//!
//! * **generality**: isomorphism in a permutational, perfectly generalizable
//!   category, which coincides with theoremhood of `A <-> B` in the equational
//!   system of associativity, commutativity, double negation and De Morgan
//!   ([`construct::decide_iso_generality`]);
//! * **Boolean**: isomorphism in the Boolean category, which holds when
//!   `A <-> B` is a tautology and the two negation-reduced formulas have the
//!   same signed letter occurrences ([`construct::decide_iso_boolean`]).
//!
//! Positive Boolean verdicts come with a witness: a pair of occurrence
//! relations whose composites are identities, built by composing the
//! relational images of explicit arrows.

pub mod canon;
pub mod cli;
pub mod construct;
pub mod error;
pub mod formula;
pub mod linking;
pub mod oracle;
pub mod semantics;

pub use error::{Error, Result};
pub use formula::{parse, Formula};
