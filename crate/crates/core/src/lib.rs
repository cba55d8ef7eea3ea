//! Singular Turán numbers, WORM colorings, and regular Turán problems:
//! exact small-case solvers, all the extremal constructions, and
//! closed-form values and bounds, cross-checkable against each other.
//!
//! The crate is `no_std` (alloc only); IO, file formats and the CLI live in
//! the companion `sintur-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canon;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod gen;
pub mod graph;
pub mod pattern;
pub mod singular;
pub mod solve;
pub mod subgraph;
pub mod verify;
pub mod worm;

pub use error::{
    CanonError, ConstructionError, FormulaError, GraphError, PatternError, SolveError,
};
pub use graph::{Graph, PartSizes};
pub use pattern::PatternGraph;
