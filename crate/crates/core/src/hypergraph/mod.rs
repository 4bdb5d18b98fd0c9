//! Hypergraph representation and structural operations.
//!
//! Vertices are dense 0-based ids. Undirected hyperedges are stored
//! with their vertices in ascending order; directed edges (used only
//! for tournaments) are ordered pairs. Values are immutable after
//! construction, so deletion and induction return fresh graphs along
//! with an id remapping.

mod gen;
mod io;
mod pattern;

pub use gen::{gen_random, next_combination, RandomModel};
pub use io::{parse, serialize};
pub use pattern::{find_pattern, MatchMode, Pattern, MAX_PATTERN_VERTICES};

use crate::error::{Error, Result};
use std::collections::HashSet;

pub type VertexId = usize;

/// A sorted, deduplicated set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new(mut ids: Vec<VertexId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn insert(&mut self, v: VertexId) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut ids = self.0.clone();
        ids.extend_from_slice(&other.0);
        VertexSet::new(ids)
    }

    /// All ids in `0..n` not present in this set.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    /// Errors unless every id is a vertex of `g`.
    pub fn validate_for(&self, g: &Hypergraph) -> Result<()> {
        match self.0.last() {
            Some(&max) if max >= g.n() => Err(Error::Input(format!(
                "vertex id {max} out of range for a graph with {} vertices",
                g.n()
            ))),
            _ => Ok(()),
        }
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<VertexId>>,
    directed: bool,
}

impl Hypergraph {
    /// Builds an undirected hypergraph. Edges are normalized to
    /// ascending vertex order; repeated vertices within an edge and
    /// duplicate (parallel) edges are rejected.
    pub fn new(n: usize, edges: Vec<Vec<VertexId>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen: HashSet<Vec<VertexId>> = HashSet::new();
        for mut e in edges {
            if e.is_empty() {
                return Err(Error::Input("empty edge".into()));
            }
            e.sort_unstable();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::Input(format!("edge repeats vertex {}", w[0])));
                }
            }
            if let Some(&max) = e.last() {
                if max >= n {
                    return Err(Error::Input(format!(
                        "vertex id {max} out of range for a graph with {n} vertices"
                    )));
                }
            }
            if !seen.insert(e.clone()) {
                return Err(Error::Input(format!("duplicate edge {e:?}")));
            }
            normalized.push(e);
        }
        Ok(Hypergraph { n, edges: normalized, directed: false })
    }

    /// Builds a directed graph from ordered arcs. Self-loops and
    /// duplicate arcs are rejected; anti-parallel arcs are allowed
    /// here and rejected later by problem validators that need
    /// tournaments.
    pub fn new_directed(n: usize, arcs: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut edges = Vec::with_capacity(arcs.len());
        let mut seen: HashSet<(VertexId, VertexId)> = HashSet::new();
        for (u, v) in arcs {
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "arc ({u},{v}) out of range for a graph with {n} vertices"
                )));
            }
            if !seen.insert((u, v)) {
                return Err(Error::Input(format!("duplicate arc ({u},{v})")));
            }
            edges.push(vec![u, v]);
        }
        Ok(Hypergraph { n, edges, directed: true })
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph { n, edges: Vec::new(), directed: false }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<VertexId>] {
        &self.edges
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// True when undirected with every edge of size exactly 2.
    pub fn is_two_uniform(&self) -> bool {
        !self.directed && self.edges.iter().all(|e| e.len() == 2)
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.directed && self.edges.iter().any(|e| e[0] == u && e[1] == v)
    }

    /// Vertex-induced subhypergraph `G[U]`, re-indexed to `0..|U|-1`
    /// by ascending original id. An edge survives iff all its
    /// endpoints lie in `U`.
    pub fn induced(&self, u: &VertexSet) -> Result<Hypergraph> {
        u.validate_for(self)?;
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, old) in u.iter().enumerate() {
            old_to_new[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| u.contains(v)))
            .map(|e| e.iter().map(|&v| old_to_new[v]).collect())
            .collect();
        Ok(Hypergraph { n: u.len(), edges, directed: self.directed })
    }

    /// `G \ S = G[V \ S]`. Returns the new graph and the old→new id
    /// mapping (`None` for deleted vertices).
    pub fn delete(&self, s: &VertexSet) -> Result<(Hypergraph, Vec<Option<VertexId>>)> {
        s.validate_for(self)?;
        let keep = s.complement(self.n);
        let g = self.induced(&keep)?;
        let mut mapping = vec![None; self.n];
        for (new, old) in keep.iter().enumerate() {
            mapping[old] = Some(new);
        }
        Ok((g, mapping))
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<(Hypergraph, Vec<Option<VertexId>>)> {
        self.delete(&VertexSet::new(vec![v]))
    }

    /// Number of incident edges. Defined only for undirected
    /// 2-uniform graphs.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        if v >= self.n {
            return Err(Error::Input(format!("vertex id {v} out of range")));
        }
        if !self.is_two_uniform() {
            return Err(Error::Unsupported(
                "vertex degrees are only defined for undirected 2-uniform graphs".into(),
            ));
        }
        Ok(self.edges.iter().filter(|e| e.contains(&v)).count())
    }

    /// Adjacency lists for an undirected 2-uniform graph.
    pub fn adjacency(&self) -> Result<Vec<Vec<VertexId>>> {
        if !self.is_two_uniform() {
            return Err(Error::Unsupported(
                "adjacency lists are only defined for undirected 2-uniform graphs".into(),
            ));
        }
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e[0]].push(e[1]);
            adj[e[1]].push(e[0]);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(adj)
    }

    /// Cycle test for undirected 2-uniform graphs (DFS with parent
    /// tracking; the graph is simple, so a visited non-parent
    /// neighbour closes a cycle).
    pub fn has_cycle(&self) -> Result<bool> {
        let adj = self.adjacency()?;
        let mut visited = vec![false; self.n];
        for start in 0..self.n {
            if visited[start] {
                continue;
            }
            let mut stack = vec![(start, usize::MAX)];
            visited[start] = true;
            while let Some((v, parent)) = stack.pop() {
                for &w in &adj[v] {
                    if w == parent {
                        continue;
                    }
                    if visited[w] {
                        return Ok(true);
                    }
                    visited[w] = true;
                    stack.push((w, v));
                }
            }
        }
        Ok(false)
    }

    /// Connected components of an undirected 2-uniform graph, each as
    /// an ascending vertex list; components ordered by smallest vertex.
    pub fn components(&self) -> Result<Vec<Vec<VertexId>>> {
        let adj = self.adjacency()?;
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        Ok(comps)
    }

    /// A shortest cycle, as a vertex set, or `None` when acyclic.
    /// BFS over every edge: the shortest cycle through edge (u,v) is
    /// (u,v) plus a shortest u–v path avoiding that edge.
    pub fn shortest_cycle(&self) -> Result<Option<VertexSet>> {
        let adj = self.adjacency()?;
        let mut best: Option<Vec<VertexId>> = None;
        for e in &self.edges {
            let (u, v) = (e[0], e[1]);
            // BFS from u to v without using edge (u,v).
            let mut prev = vec![usize::MAX; self.n];
            let mut dist = vec![usize::MAX; self.n];
            dist[u] = 0;
            let mut queue = std::collections::VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if (x == u && y == v) || (x == v && y == u) {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if dist[v] != usize::MAX {
                let mut path = vec![v];
                let mut x = v;
                while x != u {
                    x = prev[x];
                    path.push(x);
                }
                if best.as_ref().is_none_or(|b| path.len() < b.len()) {
                    best = Some(path);
                }
            }
        }
        Ok(best.map(VertexSet::new))
    }

    /// First vertex-disjoint three-legged spider (a centre `c`, three
    /// neighbours `u_i`, and three further vertices `w_i` with
    /// `u_i w_i` edges, all seven distinct), found as an ordinary
    /// subgraph. Enumeration order is fixed: centres ascending, then
    /// neighbour triples and leaf assignments in lexicographic order.
    pub fn find_spider(&self) -> Result<Option<VertexSet>> {
        let adj = self.adjacency()?;
        for c in 0..self.n {
            let nbrs = &adj[c];
            if nbrs.len() < 3 {
                continue;
            }
            for a in 0..nbrs.len() {
                for b in (a + 1)..nbrs.len() {
                    for d in (b + 1)..nbrs.len() {
                        let legs = [nbrs[a], nbrs[b], nbrs[d]];
                        if let Some(ws) = assign_leaves(&adj, c, &legs) {
                            let mut z = vec![c, legs[0], legs[1], legs[2]];
                            z.extend_from_slice(&ws);
                            return Ok(Some(VertexSet::new(z)));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Depth-first assignment of distinct leaves w_i adjacent to legs[i],
/// avoiding the centre and the legs themselves.
fn assign_leaves(adj: &[Vec<VertexId>], c: VertexId, legs: &[VertexId; 3]) -> Option<[VertexId; 3]> {
    fn rec(
        adj: &[Vec<VertexId>],
        c: VertexId,
        legs: &[VertexId; 3],
        i: usize,
        chosen: &mut Vec<VertexId>,
    ) -> Option<[VertexId; 3]> {
        if i == 3 {
            return Some([chosen[0], chosen[1], chosen[2]]);
        }
        for &w in &adj[legs[i]] {
            if w == c || legs.contains(&w) || chosen.contains(&w) {
                continue;
            }
            chosen.push(w);
            if let Some(res) = rec(adj, c, legs, i + 1, chosen) {
                return Some(res);
            }
            chosen.pop();
        }
        None
    }
    rec(adj, c, legs, 0, &mut Vec::new())
}

/// Builders for small named graphs used across tests and docs.
pub mod fixtures {
    use super::Hypergraph;

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Hypergraph {
        let edges = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        Hypergraph::new(n, edges).unwrap()
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Hypergraph {
        let edges = (0..n.saturating_sub(1)).map(|i| vec![i, i + 1]).collect();
        Hypergraph::new(n, edges).unwrap()
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Hypergraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push(vec![i, j]);
            }
        }
        Hypergraph::new(n, edges).unwrap()
    }

    /// The 7-vertex spider: centre 0, legs 0-1-2, 0-3-4, 0-5-6.
    pub fn spider_t2() -> Hypergraph {
        Hypergraph::new(
            7,
            vec![vec![0, 1], vec![1, 2], vec![0, 3], vec![3, 4], vec![0, 5], vec![5, 6]],
        )
        .unwrap()
    }

    /// Directed 3-cycle (the smallest cyclic tournament).
    pub fn directed_triangle() -> Hypergraph {
        Hypergraph::new_directed(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn induced_on_triangle() {
        let g = complete(3);
        let h = g.induced(&VertexSet::new(vec![0, 1])).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.edges(), &[vec![0, 1]]);
    }

    #[test]
    fn induced_full_vertex_set_is_identity() {
        let g = cycle(5);
        let h = g.induced(&VertexSet::full(5)).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn induced_drops_partial_hyperedge() {
        let g = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let h = g.induced(&VertexSet::new(vec![0, 1])).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn delete_from_cycle_gives_path() {
        let g = cycle(4);
        let (h, mapping) = g.delete(&VertexSet::new(vec![0])).unwrap();
        assert_eq!(h, path(3));
        assert_eq!(mapping, vec![None, Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn delete_empty_and_all() {
        let g = cycle(4);
        let (same, _) = g.delete(&VertexSet::empty()).unwrap();
        assert_eq!(same, g);
        let (none, _) = g.delete(&VertexSet::full(4)).unwrap();
        assert_eq!(none.n(), 0);
        assert_eq!(none.edge_count(), 0);
    }

    #[test]
    fn degrees() {
        assert_eq!(cycle(4).degree(0).unwrap(), 2);
        let star = Hypergraph::new(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        assert_eq!(star.degree(0).unwrap(), 3);
        let lonely = Hypergraph::new(2, vec![]).unwrap();
        assert_eq!(lonely.degree(1).unwrap(), 0);
    }

    #[test]
    fn degree_rejects_hyperedges() {
        let g = Hypergraph::new(4, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(g.degree(0), Err(crate::error::Error::Unsupported(_))));
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(Hypergraph::new(3, vec![vec![0, 3]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![1, 1]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(Hypergraph::new_directed(3, vec![(0, 0)]).is_err());
        assert!(Hypergraph::new_directed(3, vec![(0, 1), (0, 1)]).is_err());
    }

    #[test]
    fn cycle_detection() {
        assert!(cycle(5).has_cycle().unwrap());
        assert!(!path(6).has_cycle().unwrap());
        assert!(!spider_t2().has_cycle().unwrap());
        assert!(complete(4).has_cycle().unwrap());
    }

    #[test]
    fn shortest_cycle_on_theta_graph() {
        // C6 with a chord 0-2 makes the shortest cycle {0,1,2}.
        let mut edges: Vec<Vec<usize>> = (0..6).map(|i| vec![i, (i + 1) % 6]).collect();
        edges.push(vec![0, 2]);
        let g = Hypergraph::new(6, edges).unwrap();
        let z = g.shortest_cycle().unwrap().unwrap();
        assert_eq!(z, VertexSet::new(vec![0, 1, 2]));
        assert_eq!(path(4).shortest_cycle().unwrap(), None);
    }

    #[test]
    fn spider_detection() {
        assert_eq!(spider_t2().find_spider().unwrap(), Some(VertexSet::full(7)));
        assert_eq!(cycle(7).find_spider().unwrap(), None);
        // Star K_{1,3} has three legs but no second level.
        let star = Hypergraph::new(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        assert_eq!(star.find_spider().unwrap(), None);
    }

    #[test]
    fn delete_equals_induced_complement() {
        let g = complete(5);
        let s = VertexSet::new(vec![1, 3]);
        let (d, _) = g.delete(&s).unwrap();
        assert_eq!(d, g.induced(&s.complement(5)).unwrap());
    }
}
