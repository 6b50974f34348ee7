//! Weighted angle distance on strings.
//!
//! The distance compares two strings through the angles between their
//! n-gram count vectors at every scale n, aggregated with the weight
//! `rho^n`:
//!
//! ```text
//! d_rho(S, T) = sum_{n >= 1} rho^n * theta(<S>_n, <T>_n)
//! ```
//!
//! Only finitely many terms are nonzero, so the sum is exact for any
//! `rho > 0`. The crate provides:
//!
//! * [`strings`]: alphabets, rank strings, n-gram vectors, and the angle
//!   pseudometric;
//! * [`oracle`]: a deliberately naive evaluator used as ground truth;
//! * [`suffix`]: the generalized suffix structure of `S#T$` and the
//!   linear-time aggregation of per-scale norms and dot products;
//! * [`metric`]: assembly of the distance, truncation intervals, and
//!   length recovery;
//! * [`bounds`]: closed-form stability bounds for edits and stutters;
//! * [`completion`]: cylinder-marginal measure sketches, the extended
//!   distance, string approximation of measures, and theta recovery;
//! * [`baselines`]: edit-family and fixed-scale k-gram distances;
//! * [`clustering`]: DBSCAN on precomputed matrices with label-free
//!   tuning and external evaluation;
//! * [`dataset`]: TSV ingestion, synthetic stutter benchmarks, and
//!   results output;
//! * [`roster`]: the named distances exposed to the harness and CLI.
//!
//! Pairwise work (matrices, tuning trials, sweeps) is data-parallel via
//! rayon when the default `parallel` feature is enabled; disabling it
//! falls back to sequential loops with identical output.

pub mod baselines;
pub mod bounds;
pub mod clustering;
pub mod completion;
pub mod dataset;
mod error;
pub mod metric;
pub mod oracle;
pub mod par;
pub mod roster;
pub mod strings;
pub mod suffix;

pub use error::{Error, Result};
