//! Extremal constructions and stability tooling for the odd-cycle books
//! `F_{s,k}`: `s` copies of `C_{2k+1}` sharing one edge.
//!
//! * [`graph`]: bitset graphs, graph6 and edge-list I/O.
//! * [`pattern`]: the pattern itself and exact chromatic checks.
//! * [`construction`]: the digit-block lower-bound graphs and their certificates.
//! * [`freeness`]: exact `F_{s,k}` detection, maximality and saturation.
//! * [`biclique`]: maximum induced complete bipartite search, the `(U, V, T)`
//!   partition and constrained path finders.
//! * [`stability`]: the vertex-deletion pipeline extracting a complete
//!   bipartite core from a maximal `F_{s,k}`-free graph.
//! * [`commands`]: the experiment front end used by the `fsk` binary.

pub mod biclique;
pub mod commands;
pub mod construction;
pub mod freeness;
pub mod graph;
pub mod pattern;
pub mod report;
pub mod stability;

pub use graph::{Graph, GraphError, VertexSet};
pub use pattern::{build_fsk, FskParams, FskPattern};
