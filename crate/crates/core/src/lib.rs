//! Quasi k-connectivity, edge contraction and forbidden-subgraph analysis for
//! small simple graphs, plus the verification campaigns built on them.
//!
//! Graphs have at most 64 vertices and are stored as dense bitsets.

pub mod connectivity;
pub mod contraction;
mod error;
pub mod families;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod patterns;

pub use error::{Graph6Error, GraphError, Result};
pub use graph::{Edge, Graph, VertexSet, MAX_VERTICES};
