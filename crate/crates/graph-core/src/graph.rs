use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::GraphError;

/// An unordered vertex pair, stored with its endpoints sorted.
pub type Edge = (String, String);

/// Normalizes an unordered pair so `(u, v)` and `(v, u)` compare equal.
pub(crate) fn edge_key(u: &str, v: &str) -> Edge {
    if u <= v {
        (u.to_string(), v.to_string())
    } else {
        (v.to_string(), u.to_string())
    }
}

/// A commutation graph: labeled observables plus the pairs that commute.
///
/// Serialized as `{"vertices":["A0",...],"edges":[["A0","B0"],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct CommutationGraph {
    vertices: Vec<String>,
    edges: BTreeSet<Edge>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl TryFrom<RawGraph> for CommutationGraph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        let edges: Vec<(&str, &str)> = raw
            .edges
            .iter()
            .map(|(u, v)| (u.as_str(), v.as_str()))
            .collect();
        make_graph(&raw.vertices, &edges)
    }
}

impl From<CommutationGraph> for RawGraph {
    fn from(g: CommutationGraph) -> Self {
        RawGraph {
            vertices: g.vertices,
            edges: g.edges.into_iter().collect(),
        }
    }
}

impl CommutationGraph {
    /// Vertex labels in declaration order.
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Normalized edge set.
    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.iter().any(|w| w == v)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        u != v && self.edges.contains(&edge_key(u, v))
    }

    /// Neighbors of `v`, sorted by label.
    pub fn neighbors(&self, v: &str) -> Vec<&str> {
        let mut out = Vec::new();
        for (a, b) in &self.edges {
            if a == v {
                out.push(b.as_str());
            } else if b == v {
                out.push(a.as_str());
            }
        }
        out
    }

    /// True when `other`'s vertices and edges are both subsets of ours.
    pub fn contains_subgraph(&self, other: &CommutationGraph) -> bool {
        other.vertices.iter().all(|v| self.has_vertex(v))
            && other.edges.iter().all(|e| self.edges.contains(e))
    }

    /// All vertex triples whose three pairwise edges are present, as sorted
    /// triples in lexicographic order.
    ///
    /// Walks each edge and intersects the endpoints' neighborhoods, so only
    /// actual edges are touched.
    pub fn triangles(&self) -> BTreeSet<(String, String, String)> {
        let mut adjacency: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
        for (u, v) in &self.edges {
            adjacency.entry(u).or_default().insert(v);
            adjacency.entry(v).or_default().insert(u);
        }
        let mut out = BTreeSet::new();
        for (u, v) in &self.edges {
            let (nu, nv) = match (adjacency.get(u.as_str()), adjacency.get(v.as_str())) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            for &w in nu.intersection(nv) {
                // emit each triangle once, from its lexicographically least edge
                if w > v.as_str() {
                    out.insert((u.clone(), v.clone(), w.to_string()));
                }
            }
        }
        out
    }

    /// Index-based adjacency lists, vertex order matching `vertices()`.
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (u, v) in &self.edges {
            let (i, j) = (index[u.as_str()], index[v.as_str()]);
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }
}

/// Builds a normalized graph from vertex labels and edge pairs.
///
/// Duplicate edges and swapped endpoint orders collapse to one stored edge.
pub fn make_graph(vertices: &[String], edges: &[(&str, &str)]) -> Result<CommutationGraph, GraphError> {
    let mut seen = BTreeSet::new();
    for v in vertices {
        if !seen.insert(v.as_str()) {
            return Err(GraphError::DuplicateVertex(v.clone()));
        }
    }
    let mut edge_set = BTreeSet::new();
    for (u, v) in edges {
        if u == v {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        for end in [u, v] {
            if !seen.contains(end) {
                return Err(GraphError::UnknownEndpoint(end.to_string()));
            }
        }
        edge_set.insert(edge_key(u, v));
    }
    Ok(CommutationGraph {
        vertices: vertices.to_vec(),
        edges: edge_set,
    })
}

/// The n-cycle graph on the given labels, edges (v_i, v_{i+1 mod n}).
pub fn cycle_graph(vertices: &[String]) -> Result<CommutationGraph, GraphError> {
    let n = vertices.len();
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    let edges: Vec<(&str, &str)> = (0..n)
        .map(|i| (vertices[i].as_str(), vertices[(i + 1) % n].as_str()))
        .collect();
    make_graph(vertices, &edges)
}

/// Convenience for building graphs from string literals.
pub fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}
