// SPDX-License-Identifier: Apache-2.0

//! Simple undirected graphs on vertices `0..n` with stable, dense edge ids.
//!
//! Every graph here is small: vertex sets fit in a `u64` mask, which the
//! search routines in the rest of the crate lean on heavily.

mod bridges;
mod graph6;
mod hamilton;
mod iso;
mod spanning;

pub use bridges::{bridge_stats, BridgeStats};
pub use graph6::{encode_graph6, parse_graph6, read_graph6_lines};
pub use hamilton::{hamilton_path, hamilton_path_exists, HAMILTON_MAX_N};
pub use iso::{are_isomorphic, find_isomorphism, ISO_MAX_N};
pub use spanning::{for_each_spanning_tree, spanning_trees, SpanningTrees, TreeWalk, DEFAULT_SPANNING_TREE_CAP};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    masks: Vec<u64>,
}

/// Degree summary of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub max: usize,
    pub min: usize,
    /// Degrees sorted in non-increasing order.
    pub sequence: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Edge ids follow the order of `edges`,
    /// each pair is stored with its smaller endpoint first.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut g = Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n], masks: vec![0; n] };
        for (u, v) in edges {
            g.push_edge(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidEdge { u, v, reason: "endpoint out of range" });
        }
        if u == v {
            return Err(Error::InvalidEdge { u, v, reason: "loop" });
        }
        if self.masks[u] >> v & 1 == 1 {
            return Err(Error::InvalidEdge { u, v, reason: "parallel edge" });
        }
        let id = self.edges.len();
        self.edges.push((u.min(v), u.max(v)));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        self.masks[u] |= 1 << v;
        self.masks[v] |= 1 << u;
        Ok(())
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_edges(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// Neighbors of `v` as `(neighbor, edge id)`, sorted by neighbor.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbor_mask(&self, v: VertexId) -> u64 {
        self.masks[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.masks[u] >> v & 1 == 1
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if !self.has_edge(u, v) {
            return None;
        }
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        sequence.sort_unstable_by(|a, b| b.cmp(a));
        DegreeStats {
            max: sequence.first().copied().unwrap_or(0),
            min: sequence.last().copied().unwrap_or(0),
            sequence,
        }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// True iff a traversal from vertex 0 reaches every vertex. The null
    /// graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.reach_from(0, u64::MAX) == self.vertex_mask()
    }

    /// Vertices reachable from `start` using only edges whose bit is set in
    /// `edge_filter` (edge ids >= 64 are always usable).
    pub(crate) fn reach_from(&self, start: VertexId, edge_filter: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(v, e) in &self.adj[u] {
                if e < 64 && edge_filter >> e & 1 == 0 {
                    continue;
                }
                if seen >> v & 1 == 0 {
                    seen |= 1 << v;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Number of connected components of the subgraph keeping every vertex
    /// but only the edges listed in `keep`.
    pub fn component_count_with(&self, keep: &[bool]) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(v, e) in &self.adj[u] {
                    if keep[e] && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Connected with exactly one cycle.
    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.m() == self.n && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// The graph with one more edge. Edge ids of `self` are preserved; the new
    /// edge gets id `m`.
    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::from_edges(self.n, edges)
    }

    /// Spanning subgraph keeping the given edges, renumbered in the order given.
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> Result<Graph> {
        Graph::from_edges(self.n, keep.iter().map(|&e| self.edges[e]))
    }

    /// Applies the relabeling `v -> perm[v]`, keeping edge ids.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidVertexSet(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Edge ids on the unique cycle of a unicyclic graph, sorted.
    pub fn cycle_edges(&self) -> Result<Vec<EdgeId>> {
        if !self.is_unicyclic() {
            return Err(Error::NotUnicyclic);
        }
        // Cycle edges are exactly the non-bridges.
        let stats = bridge_stats(self)?;
        let mut is_bridge = vec![false; self.m()];
        for &e in &stats.bridges {
            is_bridge[e] = true;
        }
        Ok((0..self.m()).filter(|&e| !is_bridge[e]).collect())
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }
}

/// Checks that `edges` forms a tree (acyclic, connected on its endpoints) and
/// returns the vertex mask it covers.
pub fn tree_vertex_mask(g: &Graph, edges: &[EdgeId]) -> Result<u64> {
    if edges.is_empty() {
        return Err(Error::NotATree);
    }
    let mut seen_edge = vec![false; g.m()];
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut mask = 0u64;
    for &e in edges {
        if e >= g.m() || seen_edge[e] {
            return Err(Error::NotATree);
        }
        seen_edge[e] = true;
        let (u, v) = g.edge(e);
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return Err(Error::NotATree);
        }
        parent[ru] = rv;
        mask |= 1 << u | 1 << v;
    }
    // Acyclic with |V| = |E| + 1 means connected.
    if mask.count_ones() as usize != edges.len() + 1 {
        return Err(Error::NotATree);
    }
    Ok(mask)
}

pub(crate) fn mask_to_vec(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

pub(crate) fn vec_to_mask(items: &[usize]) -> u64 {
    items.iter().fold(0, |acc, &i| acc | 1 << i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::InvalidEdge { reason: "loop", .. })));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::InvalidEdge { reason: "parallel edge", .. })
        ));
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(cycle(5).is_connected());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        let star = Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap();
        assert!(star.is_connected());
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = cycle(6).with_edge(0, 3).unwrap();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_between(u, v), Some(e));
            assert_eq!(g.edge_between(v, u), Some(e));
        }
        assert_eq!(g.degree_stats().sequence, vec![3, 3, 2, 2, 2, 2]);
    }

    #[test]
    fn cycle_edges_of_unicyclic() {
        assert_eq!(cycle(4).cycle_edges().unwrap(), vec![0, 1, 2, 3]);
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.cycle_edges().unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn tree_mask_checks() {
        let g = cycle(4);
        assert_eq!(tree_vertex_mask(&g, &[0, 1, 2]).unwrap(), 0b1111);
        assert!(tree_vertex_mask(&g, &[0, 1, 2, 3]).is_err());
        assert!(tree_vertex_mask(&g, &[0, 2]).is_err());
        assert!(tree_vertex_mask(&g, &[]).is_err());
    }
}
