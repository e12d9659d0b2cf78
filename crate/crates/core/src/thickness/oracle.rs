//! Exhaustive girth-4 thickness by backtracking edge assignment.

use crate::embedding::{max_edges_girth4, planarity_test, search_embedding, Surface};
use crate::error::{Error, Result};
use crate::graph::{EdgePartition, Edge, Graph};
use std::collections::VecDeque;

pub const DEFAULT_EDGE_LIMIT: usize = 20;

/// Budget for the exhaustive projective search on a single non-planar part.
const PROJECTIVE_ROTATION_BUDGET: u128 = 2_000_000;

const MIN_GIRTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOutcome {
    Exact(usize),
    ExceedsMaxParts,
}

/// Smallest number of parts, at most `max_parts`, into which `g` splits with
/// every part of girth at least 4 and embeddable on `surface`.
pub fn brute_force_theta4(g: &Graph, surface: Surface, max_parts: usize) -> Result<SearchOutcome> {
    brute_force_theta4_with_limit(g, surface, max_parts, DEFAULT_EDGE_LIMIT)
}

pub fn brute_force_theta4_with_limit(
    g: &Graph,
    surface: Surface,
    max_parts: usize,
    edge_limit: usize,
) -> Result<SearchOutcome> {
    check_limit(g, edge_limit)?;
    if g.size() == 0 {
        return Ok(SearchOutcome::Exact(0));
    }
    for t in 1..=max_parts {
        if search(g, surface, t)?.is_some() {
            return Ok(SearchOutcome::Exact(t));
        }
    }
    Ok(SearchOutcome::ExceedsMaxParts)
}

/// A partition into exactly `parts` feasible parts, if one exists.
pub fn brute_force_decomposition(
    g: &Graph,
    surface: Surface,
    parts: usize,
) -> Result<Option<EdgePartition>> {
    check_limit(g, DEFAULT_EDGE_LIMIT)?;
    Ok(search(g, surface, parts)?.map(EdgePartition::new))
}

fn check_limit(g: &Graph, edge_limit: usize) -> Result<()> {
    if g.size() > edge_limit {
        return Err(Error::SearchLimit(format!(
            "exhaustive search is limited to {edge_limit} edges, the graph has {}",
            g.size()
        )));
    }
    Ok(())
}

struct Part {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    touched: usize,
}

impl Part {
    fn new(order: usize) -> Self {
        Self {
            adj: vec![Vec::new(); order],
            edges: Vec::new(),
            touched: 0,
        }
    }

    /// Breadth-first distance from `u` to `v`, capped at `limit`.
    fn distance_at_most(&self, u: usize, v: usize, limit: usize) -> bool {
        let mut dist = vec![usize::MAX; self.adj.len()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                return true;
            }
            if dist[x] == limit {
                continue;
            }
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn push(&mut self, (u, v): Edge) {
        self.touched += usize::from(self.adj[u].is_empty()) + usize::from(self.adj[v].is_empty());
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges.push((u, v));
    }

    fn pop(&mut self) {
        let (u, v) = self.edges.pop().expect("pop after push");
        self.adj[u].pop();
        self.adj[v].pop();
        self.touched -= usize::from(self.adj[u].is_empty()) + usize::from(self.adj[v].is_empty());
    }
}

struct Search<'a> {
    order: usize,
    surface: Surface,
    edges: &'a [Edge],
    parts: Vec<Part>,
}

impl Search<'_> {
    /// Adding `e` to part `p` keeps girth >= 4, the edge bound and the
    /// embeddability of the part.
    fn fits(&mut self, p: usize, e: Edge) -> Result<bool> {
        let part = &self.parts[p];
        if part.distance_at_most(e.0, e.1, MIN_GIRTH - 2) {
            return Ok(false);
        }
        let touched = part.touched
            + usize::from(part.adj[e.0].is_empty())
            + usize::from(part.adj[e.1].is_empty());
        if part.edges.len() + 1 > max_edges_girth4(touched, self.surface) {
            return Ok(false);
        }
        let mut edges = part.edges.clone();
        edges.push(e);
        let g = Graph::from_edges(self.order, edges)?;
        if planarity_test(&g).planar {
            return Ok(true);
        }
        match self.surface {
            Surface::Plane => Ok(false),
            Surface::ProjectivePlane => {
                Ok(search_embedding(&g, 1, false, PROJECTIVE_ROTATION_BUDGET)?.is_some())
            }
        }
    }

    fn assign(&mut self, i: usize, used: usize) -> Result<bool> {
        if i == self.edges.len() {
            return Ok(true);
        }
        let e = self.edges[i];
        // symmetry breaking: open at most one fresh part per edge
        let reach = (used + 1).min(self.parts.len());
        for p in 0..reach {
            if self.fits(p, e)? {
                self.parts[p].push(e);
                if self.assign(i + 1, used.max(p + 1))? {
                    return Ok(true);
                }
                self.parts[p].pop();
            }
        }
        Ok(false)
    }
}

fn search(g: &Graph, surface: Surface, t: usize) -> Result<Option<Vec<Vec<Edge>>>> {
    if t == 0 {
        return Ok((g.size() == 0).then(Vec::new));
    }
    let mut edges = g.edges().to_vec();
    edges.sort_by_key(|&(u, v)| std::cmp::Reverse(g.degree(u) + g.degree(v)));
    let mut s = Search {
        order: g.order(),
        surface,
        edges: &edges,
        parts: (0..t).map(|_| Part::new(g.order())).collect(),
    };
    if s.assign(0, 0)? {
        Ok(Some(s.parts.into_iter().map(|p| p.edges).collect()))
    } else {
        Ok(None)
    }
}
