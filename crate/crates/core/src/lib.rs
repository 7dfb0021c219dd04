//! Exact decision procedures for hollowness and emptiness of the lattice
//! simplices `K_alpha = cvx{0, e_1, ..., e_{n-1}, alpha^T}`, the modular
//! criterion for asymptotic hollowness of integer tuples, proscriptive
//! intervals, and the finite searches built on top of them.
//!
//! Everything is exact: integers are `i64`, rationals are normalized
//! fractions, and no floating point value ever takes part in a decision.
//!
//! With the default `parallel` feature the sweeps (criterion loops,
//! per-prefix searches, oracle agreement runs) fan out over rayon; without
//! it the same code runs sequentially. Results are identical either way.

pub mod appendix;
pub mod arith;
pub mod asymptotic;
pub mod classify;
pub mod cli;
mod error;
pub mod par;
pub mod proscriptive;
pub mod simplex;

pub use error::{Error, Result};

pub use arith::{content, rem_pos, scaled_union, HalfOpenInterval, Rat, RaySummary};
pub use asymptotic::{
    criterion_inequality, is_asymptotically_hollow, thresholds, CriterionWitness, Range, TupleA,
};
pub use simplex::SimplexSpec;
