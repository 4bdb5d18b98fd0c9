//! Brute-force containment search for small forbidden structures.
//!
//! Patterns are matched by enumerating ordered tuples of distinct host
//! vertices in lexicographic order with early pruning, so the first
//! witness is deterministic. Every pattern in scope has at most
//! [`MAX_PATTERN_VERTICES`] vertices, which keeps this tractable.

use super::{Hypergraph, VertexId, VertexSet};
use crate::error::{Error, Result};
use std::collections::HashSet;

/// Hard cap on pattern size; larger patterns are a configuration error.
pub const MAX_PATTERN_VERTICES: usize = 8;

/// How a pattern is tested for containment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchMode {
    /// `G[Z]` must be isomorphic to the pattern.
    Induced,
    /// The pattern must embed into `G[Z]` preserving edges.
    Subgraph,
}

/// A small forbidden structure together with its containment mode.
#[derive(Debug, Clone)]
pub struct Pattern {
    graph: Hypergraph,
    mode: MatchMode,
}

impl Pattern {
    pub fn new(graph: Hypergraph, mode: MatchMode) -> Result<Self> {
        if graph.n() > MAX_PATTERN_VERTICES {
            return Err(Error::Config(format!(
                "pattern has {} vertices; at most {MAX_PATTERN_VERTICES} are supported",
                graph.n()
            )));
        }
        if graph.n() == 0 {
            return Err(Error::Config("empty pattern".into()));
        }
        Ok(Pattern { graph, mode })
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn mode(&self) -> MatchMode {
        self.mode
    }

    /// Path on `len ≥ 2` vertices, matched as a subgraph.
    pub fn path(len: usize) -> Self {
        Pattern::new(super::fixtures::path(len), MatchMode::Subgraph).unwrap()
    }

    /// A single undirected edge of the given cardinality, induced.
    pub fn single_edge(cardinality: usize) -> Self {
        let g = Hypergraph::new(cardinality, vec![(0..cardinality).collect()]).unwrap();
        Pattern::new(g, MatchMode::Induced).unwrap()
    }

    /// The directed 3-cycle, induced.
    pub fn directed_triangle() -> Self {
        Pattern::new(super::fixtures::directed_triangle(), MatchMode::Induced).unwrap()
    }
}

/// Finds a witness `Z ⊆ V(g)` for the pattern, or `None`.
///
/// Enumerates assignments `pattern vertex i → tuple[i]` over ordered
/// tuples of distinct host vertices in lexicographic order and returns
/// the vertex set of the first embedding.
pub fn find_pattern(g: &Hypergraph, p: &Pattern) -> Result<Option<VertexSet>> {
    if p.graph.n() > MAX_PATTERN_VERTICES {
        return Err(Error::Config("oversized pattern".into()));
    }
    if p.graph.is_directed() != g.is_directed() {
        return Err(Error::Input(
            "pattern and host graph must both be directed or both undirected".into(),
        ));
    }
    if p.graph.n() > g.n() {
        return Ok(None);
    }

    let host_edges: HashSet<&[VertexId]> =
        g.edges().iter().map(|e| e.as_slice()).collect();
    let mut assignment: Vec<VertexId> = Vec::with_capacity(p.graph.n());
    let mut used = vec![false; g.n()];
    if dfs(g, p, &host_edges, &mut assignment, &mut used) {
        Ok(Some(VertexSet::new(assignment)))
    } else {
        Ok(None)
    }
}

fn dfs(
    g: &Hypergraph,
    p: &Pattern,
    host_edges: &HashSet<&[VertexId]>,
    assignment: &mut Vec<VertexId>,
    used: &mut [bool],
) -> bool {
    let depth = assignment.len();
    if depth == p.graph.n() {
        return check_complete(g, p, host_edges, assignment);
    }
    for v in 0..g.n() {
        if used[v] {
            continue;
        }
        assignment.push(v);
        used[v] = true;
        if prefix_consistent(p, host_edges, assignment)
            && dfs(g, p, host_edges, assignment, used)
        {
            return true;
        }
        used[v] = false;
        assignment.pop();
    }
    false
}

/// Every pattern edge whose vertices are all assigned must map to a
/// host edge. This holds in both modes and is the pruning workhorse.
fn prefix_consistent(
    p: &Pattern,
    host_edges: &HashSet<&[VertexId]>,
    assignment: &[VertexId],
) -> bool {
    let depth = assignment.len();
    p.graph
        .edges()
        .iter()
        .filter(|e| e.iter().all(|&pv| pv < depth))
        .all(|e| host_edges.contains(map_edge(e, assignment, p.graph.is_directed()).as_slice()))
}

fn check_complete(
    g: &Hypergraph,
    p: &Pattern,
    host_edges: &HashSet<&[VertexId]>,
    assignment: &[VertexId],
) -> bool {
    // Subgraph side already verified incrementally.
    debug_assert!(prefix_consistent(p, host_edges, assignment));
    if p.mode == MatchMode::Subgraph {
        return true;
    }
    // Induced: host edges inside the image must be images of pattern
    // edges, i.e. the edge counts match (images of distinct pattern
    // edges are distinct because the assignment is injective).
    let image: HashSet<VertexId> = assignment.iter().copied().collect();
    let inside = g
        .edges()
        .iter()
        .filter(|e| e.iter().all(|v| image.contains(v)))
        .count();
    inside == p.graph.edge_count()
}

fn map_edge(e: &[VertexId], assignment: &[VertexId], directed: bool) -> Vec<VertexId> {
    let mut mapped: Vec<VertexId> = e.iter().map(|&pv| assignment[pv]).collect();
    if !directed {
        mapped.sort_unstable();
    }
    mapped
}
