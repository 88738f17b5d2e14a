//! Kernelization engine for SEMITOTAL DOMINATING SET on planar graphs.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only the algorithmic
//! parts: the graph substrate, neighborhood partitions, exact oracles, the
//! three reduction rules with their fixpoint driver, planarity testing and
//! region decompositions, hardness gadgets, and seeded generators. File
//! formats, JSON reports and the command-line front end live in the
//! `semitotal` crate.
//!
//! A set `D` is a *semitotal dominating set* (sds) if it dominates the graph
//! and every member has another member within distance two. The reduction
//! rules shrink a graph without changing the size of a minimum sds, and on
//! planar inputs the result has at most `358 * k` vertices.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod neighborhoods;
pub mod oracle;
pub mod planar;
pub mod rules;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Vertex, VertexSet};
pub use oracle::{DominationKind, DominationSolution, Outcome};
