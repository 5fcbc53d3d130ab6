//! Graph bootstrap percolation laboratory.
//!
//! The H-process starts from a graph `G` and, round by round, adds every
//! missing edge that completes a new copy of the infection rule `H`. This
//! crate provides an exact engine for that process together with builders for
//! the known extremal starting graphs and brute-force oracles that check the
//! closed-form running times and weak-saturation numbers at small scale.
//!
//! Modules:
//! - [`graphcore`]: dense bitset graphs, anchored embedding search, edge
//!   orbits, canonical forms, small-graph enumeration, graph6 and edge lists.
//! - [`engine`]: infection rules, single rounds, full traces, closure.
//! - [`constructions`]: chains, extremal graphs, gadgets and special rules.
//! - [`arithmetic`]: dilation sets free of bounded-coefficient relations.
//! - [`analyzers`]: chain conditions, separability, exhaustive searches and
//!   Monte Carlo percolation estimates.
//! - [`cli`]: rule specifications and the command implementations behind the
//!   `bootstrap-lab` binary.

pub mod analyzers;
pub mod arithmetic;
pub mod cli;
pub mod constructions;
pub mod engine;
mod error;
pub mod graphcore;

pub use error::{Error, Result};
pub use graphcore::{Edge, Graph};
