//! Alexander-type invariants of plane curve and line arrangement complements.
//!
//! The crate is layered bottom-up:
//!
//! - [`ringkit`]: exact Laurent polynomial, matrix and PID arithmetic.
//! - [`groups`]: finitely presented groups, their text format and abelianization.
//! - [`foxcalc`]: Fox free differential calculus and the Alexander matrix.
//! - [`alexinv`]: elementary ideals, the Alexander polynomial and `delta_0`
//!   computed both as a degree and as a torsion rank over a PID.
//! - [`arrangements`]: rational line arrangements, combinatorial bounds,
//!   closed-form family values and presentations from a real wiring sweep.
//! - [`selftest`]: the bundled regression corpus.

pub mod alexinv;
pub mod arrangements;
pub mod foxcalc;
pub mod groups;
pub mod ringkit;
pub mod selftest;
