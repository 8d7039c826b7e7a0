//! Commutation graphs of measurement scenarios.
//!
//! Vertices are observable labels and an edge joins two observables that
//! commute (are jointly measurable). On top of the plain graph type this
//! crate provides chordality recognition via maximum cardinality search
//! and the chordal edge-decomposition search that underlies monogamy
//! derivations: a joint graph is split into chordal subgraphs so that a
//! prescribed set of edges is covered exactly once.

mod chordal;
mod decompose;
mod graph;

pub use chordal::is_chordal;
pub use decompose::{chordal_edge_decompositions, ChordalDecomposition, DecompositionIter};
pub use graph::{cycle_graph, labels, make_graph, CommutationGraph, Edge};

use std::fmt;

/// Errors raised by graph construction and the decomposition search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A vertex label occurs twice in the input sequence.
    DuplicateVertex(String),
    /// An edge endpoint is not a declared vertex.
    UnknownEndpoint(String),
    /// An edge joins a vertex to itself.
    SelfLoop(String),
    /// A cycle graph needs at least three vertices.
    CycleTooShort(usize),
    /// A required edge is absent from the joint graph.
    EdgeNotInGraph(String, String),
    /// The subgraph budget must be at least one.
    ZeroSubgraphs,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::DuplicateVertex(v) => write!(f, "duplicate vertex label {v:?}"),
            GraphError::UnknownEndpoint(v) => write!(f, "edge endpoint {v:?} is not a vertex"),
            GraphError::SelfLoop(v) => write!(f, "self-loop on vertex {v:?}"),
            GraphError::CycleTooShort(n) => write!(f, "cycle graph needs n >= 3, got {n}"),
            GraphError::EdgeNotInGraph(u, v) => {
                write!(f, "required edge ({u:?}, {v:?}) is not in the joint graph")
            }
            GraphError::ZeroSubgraphs => write!(f, "subgraph count m must be >= 1"),
        }
    }
}

impl std::error::Error for GraphError {}
