//! Iterated operators on fixed-width digit strings.
//!
//! The Kaprekar routine (sort digits descending, subtract the ascending
//! sort, repeat) is one member of a family: pick any map `f` on the finite
//! set of width-k digit strings and iterate it. Because the space is finite,
//! every chain is rho-shaped — a transient tail feeding a cycle. This crate
//! provides:
//!
//! - [`digitspace`]: fixed-width digit strings with explicit leading zeros
//!   and the digit primitives (sorting, reversal, permutations).
//! - [`operators`]: a catalog of step operators (Kaprekar, permutation
//!   differences, reverse difference, group swap-add, digit shifts, affine
//!   maps, digit power sums, a seeded pseudorandom map) plus the textual
//!   spec format for configuring them.
//! - [`dynamics`]: single-trajectory iteration with exact preperiod/period
//!   decomposition.
//! - [`atlas`]: exhaustive functional-graph analysis over all 10^k states —
//!   cycles, fixed points, transient histograms, basin sizes — with an
//!   independent per-seed verification gate.
//! - [`randomops`]: deterministic pseudorandom walks contrasting a fixed
//!   random *function* (always eventually cyclic) with fresh per-step
//!   randomness (where a repeat implies nothing).
//! - [`cli`] and [`render`]: the `digit-atlas` binary and its text/JSON/CSV
//!   report formats.
//!
//! ```
//! use digit_atlas::{parse_operator_spec, DigitString};
//!
//! let spec = parse_operator_spec(r#"{"kind":"kaprekar","width":4}"#).unwrap();
//! let seed: DigitString = "3524".parse().unwrap();
//! let traj = digit_atlas::iterate(&spec, seed, None).unwrap();
//! assert_eq!(traj.states.last().unwrap().to_string(), "6174");
//!
//! let report = digit_atlas::atlas::build_atlas(&spec).unwrap();
//! assert_eq!(report.fixed_points, vec![0, 6174]);
//! ```

pub mod atlas;
pub mod cli;
pub mod digitspace;
pub mod dynamics;
pub mod error;
pub mod operators;
pub mod randomops;
pub mod render;

pub use digitspace::{DigitString, Permutation};
pub use dynamics::{classify, iterate, Outcome, Trajectory};
pub use error::{Error, Result};
pub use operators::{parse_operator_spec, Grouping, OperatorKind, OperatorSpec, ZeroPolicy};
