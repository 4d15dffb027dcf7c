//! Simple undirected graphs and loop-free digraphs on `{0, .., n-1}`, with
//! the graph6/digraph6 text codecs and the handful of structural operations
//! the symmetry analysis needs (double covers, twin detection, arc lists).
//!
//! Adjacency is kept as sorted neighbour lists; every list-valued query
//! returns a deterministically ordered result so downstream output is
//! byte-stable across runs.

mod digraph;
mod error;
mod graph;
mod graph6;

pub use digraph::Digraph;
pub use error::GraphError;
pub use graph::Graph;
