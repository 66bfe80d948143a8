// SPDX-License-Identifier: Apache-2.0

use std::collections::VecDeque;

use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Exact edge-chromatic number with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiPrimeResult {
    pub chi_prime: usize,
    pub witness: EdgeColoring,
}

const CHI_PRIME_MAX_N: usize = 10;

/// Computes the edge-chromatic number by backtracking over palettes Δ and Δ+1.
///
/// A graph with more than `Δ * floor(n/2)` edges cannot be split into Δ
/// matchings, so palette Δ is skipped for it.
pub fn chi_prime(g: &Graph) -> Result<ChiPrimeResult> {
    if g.n() > CHI_PRIME_MAX_N {
        return Err(Error::SizeCap { what: "edge-chromatic number", limit: CHI_PRIME_MAX_N, n: g.n() });
    }
    let delta = g.max_degree();
    if g.m() == 0 {
        return Ok(ChiPrimeResult { chi_prime: 0, witness: EdgeColoring::new(vec![], 0)? });
    }
    let order = constrained_order(g);
    let overfull = g.m() > delta * (g.n() / 2);
    let palettes = if overfull { vec![delta + 1] } else { vec![delta, delta + 1] };
    for palette in palettes {
        if let Some(colors) = color_edges(g, &order, palette) {
            return Ok(ChiPrimeResult { chi_prime: palette, witness: EdgeColoring::new(colors, palette)? });
        }
    }
    unreachable!("every simple graph has a (Δ+1)-edge-coloring")
}

/// Edges of a max-degree vertex first, then repeatedly the edge touching the
/// most already-ordered edges.
fn constrained_order(g: &Graph) -> Vec<EdgeId> {
    let m = g.m();
    let hub = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
    let mut placed = vec![false; m];
    let mut pressure = vec![0usize; m];
    let mut order = Vec::with_capacity(m);
    let place = |e: EdgeId, placed: &mut Vec<bool>, pressure: &mut Vec<usize>, order: &mut Vec<EdgeId>| {
        placed[e] = true;
        order.push(e);
        let (u, v) = g.edge(e);
        for w in [u, v] {
            for &(_, f) in g.neighbors(w) {
                pressure[f] += 1;
            }
        }
    };
    for &(_, e) in g.neighbors(hub) {
        place(e, &mut placed, &mut pressure, &mut order);
    }
    while order.len() < m {
        let e = (0..m).filter(|&e| !placed[e]).max_by_key(|&e| (pressure[e], std::cmp::Reverse(e))).unwrap();
        place(e, &mut placed, &mut pressure, &mut order);
    }
    order
}

fn color_edges(g: &Graph, order: &[EdgeId], palette: usize) -> Option<Vec<usize>> {
    fn rec(
        g: &Graph,
        order: &[EdgeId],
        i: usize,
        palette: usize,
        top: usize,
        at: &mut [u64],
        colors: &mut [usize],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let e = order[i];
        let (u, v) = g.edge(e);
        let busy = at[u] | at[v];
        // New colors are interchangeable: only the first unused one is tried.
        for c in 0..palette.min(top + 1) {
            let bit = 1u64 << c;
            if busy & bit != 0 {
                continue;
            }
            at[u] |= bit;
            at[v] |= bit;
            colors[e] = c + 1;
            if rec(g, order, i + 1, palette, top.max(c + 1), at, colors) {
                return true;
            }
            at[u] &= !bit;
            at[v] &= !bit;
        }
        false
    }
    let mut at = vec![0u64; g.n()];
    let mut colors = vec![0; g.m()];
    rec(g, order, 0, palette, 0, &mut at, &mut colors).then_some(colors)
}

/// Colors the edges of a spanning tree of `g` (given by edge ids) greedily from
/// the root 0: each vertex hands its child edges the smallest colors that
/// differ from its parent edge and from each other. Edges outside the tree are
/// left at color 0. Uses exactly Δ(tree) colors.
pub fn color_spanning_tree(g: &Graph, tree_edges: &[EdgeId]) -> Result<Vec<usize>> {
    let mask = crate::graph::tree_vertex_mask(g, tree_edges)?;
    if mask != g.vertex_mask() {
        return Err(Error::NotATree);
    }
    let mut in_tree = vec![false; g.m()];
    for &e in tree_edges {
        in_tree[e] = true;
    }
    let mut colors = vec![0; g.m()];
    let mut parent_color = vec![0usize; g.n()];
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        let mut next = 1;
        for &(v, e) in g.neighbors(u) {
            if !in_tree[e] || seen[v] {
                continue;
            }
            if next == parent_color[u] {
                next += 1;
            }
            colors[e] = next;
            parent_color[v] = next;
            next += 1;
            seen[v] = true;
            queue.push_back(v);
        }
    }
    Ok(colors)
}

/// Proper edge coloring of a tree with Δ colors.
pub fn proper_edge_color_tree(t: &Graph) -> Result<EdgeColoring> {
    if !t.is_tree() || t.n() < 2 {
        return Err(Error::GraphNotATree);
    }
    let all: Vec<EdgeId> = (0..t.m()).collect();
    let colors = color_spanning_tree(t, &all)?;
    EdgeColoring::new(colors, t.max_degree())
}
