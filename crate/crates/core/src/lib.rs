//! Exact counts of maximal subbundles of a generic vector bundle on a curve.
//!
//! Two rank pairs are covered: line subbundles of a rank-`r` bundle, counted
//! by `r^g`, and rank-2 subbundles of a rank-4 bundle, counted by `a_g` or
//! `b_g` according to the parity of the subbundle degree. Each count is
//! available along independent routes (naive recurrence, matrix power,
//! binomial sum, eigenvalue form) and as a per-split trace of the
//! degeneration step.

pub mod closed_forms;
pub mod count;
pub mod degeneration;
pub mod error;
pub mod invariants;
pub mod recurrence;

pub use closed_forms::{
    a_binomial, a_eigen, b_binomial, b_eigen, binomial, count_line_subbundles, count_rank2_of_4,
};
pub use count::{CountValue, CountVector};
pub use degeneration::{
    build_trace, build_trace_for, genus_one_base, trace_total, ContributionRecord, GenusOneBase,
    TraceTree,
};
pub use error::{Error, Result};
pub use invariants::{
    check_finiteness, family_dimension, moduli_dimension, solve_dprime, Parity, SolvedProblem,
    SubbundleProblem, SupportedCase,
};
pub use recurrence::{count_at_genus, iterate, mat_pow, step, SquareMatrix, TransferSystem};
