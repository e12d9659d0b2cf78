//! Simple undirected graphs on dense vertex indices `0..order`.

mod dot;
mod family;
mod girth;
mod graph6;
mod partition;

pub use dot::to_dot;
pub use family::{named_family, Family};
pub use girth::{girth, Girth};
pub use graph6::{parse_graph6, write_graph6};
pub use partition::{validate_partition, EdgePartition, PartitionReport};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// An unordered edge, always stored with `.0 < .1`.
pub type Edge = (usize, usize);

pub fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph. Edges are kept sorted, so an edge's position in
/// [`Graph::edges`] is a stable edge index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Self {
            order,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); order],
        }
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; repeated edges collapse.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::MalformedInput(format!(
                    "edge {{{u},{v}}} out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::MalformedInput(format!("loop at vertex {u}")));
            }
            list.push(normalize(u, v));
        }
        list.sort_unstable();
        list.dedup();
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self {
            order,
            edges: list,
            adjacency,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&normalize(u, v)).ok()
    }

    /// The spanning subgraph `(V(self), edges)`.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> Result<Self> {
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::MalformedInput(format!(
                    "edge {{{u},{v}}} is not in the host graph"
                )));
            }
        }
        Self::from_edges(self.order, edges.iter().copied())
    }

    /// Connected-component id of every vertex, numbered in order of the
    /// smallest vertex, plus the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.order];
        let mut count = 0;
        let mut stack = Vec::new();
        for root in 0..self.order {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = count;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }
}

/// An ordered walk of vertices, either open (path) or closed (cycle).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSequence {
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl VertexSequence {
    pub fn path(vertices: Vec<usize>) -> Self {
        Self {
            vertices,
            closed: false,
        }
    }

    pub fn cycle(vertices: Vec<usize>) -> Self {
        Self {
            vertices,
            closed: true,
        }
    }

    /// Consecutive vertex pairs, including last-to-first when closed.
    pub fn steps(&self) -> Vec<(usize, usize)> {
        let vs = &self.vertices;
        let mut out: Vec<_> = vs.windows(2).map(|w| (w[0], w[1])).collect();
        if self.closed && vs.len() > 1 {
            out.push((vs[vs.len() - 1], vs[0]));
        }
        out
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.steps()
            .into_iter()
            .map(|(u, v)| normalize(u, v))
            .collect()
    }

    /// True when the sequence visits each of `0..order` exactly once.
    pub fn is_hamiltonian(&self, order: usize) -> bool {
        if self.vertices.len() != order {
            return false;
        }
        let mut seen = vec![false; order];
        for &v in &self.vertices {
            if v >= order || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }
}
