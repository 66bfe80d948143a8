// SPDX-License-Identifier: Apache-2.0

//! Exhaustive search for proper or rainbow S-trees.
//!
//! [`SubtreeSearch`] enumerates the subtrees containing a root vertex by
//! branching on one frontier edge at a time: either the edge joins the tree or
//! it is excluded for the rest of that branch. Each subtree is reached exactly
//! once, color conflicts cut a branch as soon as they appear, and a branch dies
//! once some target vertex is no longer reachable.

use itertools::Itertools;

use super::{EdgeColoring, TreeKind, TreeWitness};
use crate::error::{Error, Result};
use crate::graph::{mask_to_vec, vec_to_mask, Graph, VertexId};

/// S-tree searches enumerate subtrees; they refuse graphs above this order.
pub const TREE_SEARCH_MAX_N: usize = 10;

pub(crate) struct SubtreeSearch<'g> {
    g: &'g Graph,
    kind: TreeKind,
}

struct State<'a> {
    colors: &'a [u64],
    allowed: u64,
    target: u64,
    in_tree: u64,
    tree_edges: u64,
    excluded: u64,
    /// Per-vertex colors on incident tree edges (proper trees).
    at: [u64; TREE_SEARCH_MAX_N],
    /// Colors anywhere in the tree (rainbow trees).
    global: u64,
}

impl<'g> SubtreeSearch<'g> {
    pub(crate) fn new(g: &'g Graph, kind: TreeKind) -> Result<Self> {
        if g.n() > TREE_SEARCH_MAX_N {
            return Err(Error::SizeCap { what: "S-tree search", limit: TREE_SEARCH_MAX_N, n: g.n() });
        }
        Ok(SubtreeSearch { g, kind })
    }

    /// Edge mask of some qualifying tree that contains `root`, stays inside
    /// `allowed` and covers `target`, if one exists. `colors` holds one color
    /// bit per edge.
    pub(crate) fn find(&self, colors: &[u64], root: VertexId, allowed: u64, target: u64) -> Option<u64> {
        debug_assert!(allowed >> root & 1 == 1);
        let mut st = State {
            colors,
            allowed,
            target,
            in_tree: 1 << root,
            tree_edges: 0,
            excluded: 0,
            at: [0; TREE_SEARCH_MAX_N],
            global: 0,
        };
        self.rec(&mut st).then_some(st.tree_edges)
    }

    /// Does `s` (as a vertex mask) have a qualifying tree anywhere in the graph?
    pub(crate) fn exists(&self, colors: &[u64], s: u64) -> bool {
        if s.count_ones() <= 1 {
            return true;
        }
        let root = s.trailing_zeros() as usize;
        self.find(colors, root, self.g.vertex_mask(), s).is_some()
    }

    #[inline]
    fn usable(&self, st: &State, u: usize, e: usize) -> bool {
        let bit = st.colors[e];
        match self.kind {
            TreeKind::Proper => st.at[u] & bit == 0,
            TreeKind::Rainbow => st.global & bit == 0,
        }
    }

    /// Every target vertex still reachable through edges this branch may use.
    fn targets_reachable(&self, st: &State) -> bool {
        let mut reach = st.in_tree;
        let mut stack = Vec::with_capacity(TREE_SEARCH_MAX_N);
        let mut t = st.in_tree;
        while t != 0 {
            let u = t.trailing_zeros() as usize;
            t &= t - 1;
            for &(v, e) in self.g.neighbors(u) {
                let vb = 1u64 << v;
                if reach & vb == 0 && st.allowed & vb != 0 && st.excluded >> e & 1 == 0 && self.usable(st, u, e) {
                    reach |= vb;
                    stack.push(v);
                }
            }
        }
        while let Some(u) = stack.pop() {
            for &(v, e) in self.g.neighbors(u) {
                let vb = 1u64 << v;
                if reach & vb == 0 && st.allowed & vb != 0 && st.excluded >> e & 1 == 0 {
                    reach |= vb;
                    stack.push(v);
                }
            }
        }
        reach & st.target == st.target
    }

    fn rec(&self, st: &mut State) -> bool {
        if st.in_tree & st.target == st.target {
            return true;
        }
        if !self.targets_reachable(st) {
            return false;
        }
        // Prefer a frontier edge that lands on a target vertex.
        let mut pick = None;
        let mut t = st.in_tree;
        'scan: while t != 0 {
            let u = t.trailing_zeros() as usize;
            t &= t - 1;
            for &(v, e) in self.g.neighbors(u) {
                let vb = 1u64 << v;
                if st.in_tree & vb != 0 || st.allowed & vb == 0 || st.excluded >> e & 1 == 1 || !self.usable(st, u, e) {
                    continue;
                }
                if st.target & vb != 0 {
                    pick = Some((u, v, e));
                    break 'scan;
                }
                pick.get_or_insert((u, v, e));
            }
        }
        let Some((u, v, e)) = pick else {
            return false;
        };

        let bit = st.colors[e];
        let (at_u, at_v, global) = (st.at[u], st.at[v], st.global);
        st.at[u] |= bit;
        st.at[v] |= bit;
        st.global |= bit;
        st.in_tree |= 1 << v;
        st.tree_edges |= 1 << e;
        if self.rec(st) {
            return true;
        }
        st.at[u] = at_u;
        st.at[v] = at_v;
        st.global = global;
        st.in_tree &= !(1 << v);
        st.tree_edges &= !(1 << e);

        st.excluded |= 1 << e;
        let found = self.rec(st);
        st.excluded &= !(1 << e);
        found
    }

    /// A smallest qualifying tree for `s`: vertex supersets of `s` are tried
    /// by increasing size, in lexicographic order within a size, and the first
    /// superset whose induced subgraph has a qualifying spanning tree wins.
    pub(crate) fn smallest_witness(&self, colors: &[u64], s: &[VertexId]) -> Option<TreeWitness> {
        let s_mask = vec_to_mask(s);
        let root = s_mask.trailing_zeros() as usize;
        if !self.exists(colors, s_mask) {
            return None;
        }
        let rest: Vec<usize> = (0..self.g.n()).filter(|&v| s_mask >> v & 1 == 0).collect();
        for extra in 0..=rest.len() {
            for add in rest.iter().copied().combinations(extra) {
                let u = s_mask | vec_to_mask(&add);
                if let Some(edges) = self.find(colors, root, u, u) {
                    return Some(TreeWitness { s: s.to_vec(), tree_edges: mask_to_vec(edges) });
                }
            }
        }
        unreachable!("existence was established above")
    }
}

pub(crate) fn check_vertex_set(g: &Graph, s: &[VertexId]) -> Result<()> {
    if s.len() < 2 {
        return Err(Error::InvalidVertexSet(format!("|S| = {} < 2", s.len())));
    }
    if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidVertexSet(format!("vertex {v} not in graph")));
    }
    if !s.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidVertexSet("S must be sorted without repeats".into()));
    }
    Ok(())
}

/// Finds a tree of the given kind covering `s`, smallest first.
pub fn s_tree_exists(g: &Graph, col: &EdgeColoring, s: &[VertexId], kind: TreeKind) -> Result<Option<TreeWitness>> {
    g.require_connected()?;
    let search = SubtreeSearch::new(g, kind)?;
    col.check_fits(g)?;
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    check_vertex_set(g, &s)?;
    Ok(search.smallest_witness(&col.bits(), &s))
}

/// A proper S-tree, if one exists.
pub fn proper_s_tree_exists(g: &Graph, col: &EdgeColoring, s: &[VertexId]) -> Result<Option<TreeWitness>> {
    s_tree_exists(g, col, s, TreeKind::Proper)
}

/// A rainbow S-tree, if one exists.
pub fn rainbow_s_tree_exists(g: &Graph, col: &EdgeColoring, s: &[VertexId]) -> Result<Option<TreeWitness>> {
    s_tree_exists(g, col, s, TreeKind::Rainbow)
}
