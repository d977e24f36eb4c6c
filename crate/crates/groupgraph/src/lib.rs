//! Graphs attached to finite groups.
//!
//! A group is represented by its full Cayley table, so everything here is
//! exact and brute-force-checkable. From a group we build the *power graph*
//! (x ~ y when one is a power of the other), the *enhanced power graph*
//! (x ~ y when both are powers of a common element), the *commuting graph*
//! and the *prime graph*, then compute clique number, chromatic number,
//! independence number, domination number, diameter and component counts,
//! and run a battery of structural cross-checks relating the four graphs.
//!
//! The `cli` module exposes all of it as a small command line tool.

#![forbid(unsafe_code)]

pub mod arith;
pub mod classify;
pub mod cli;
pub mod graph;
pub mod group;
pub mod invariants;


pub use graph::{build_graph, BuildKind, DirectedPowerGraph, Graph, GraphKind, IdentityPolicy};
pub use group::{build_group, ElementSet, FiniteGroup, GroupError, GroupSpec};
pub use invariants::{InvariantReport, SolverParams};

