// SPDX-License-Identifier: Apache-2.0

//! Exhaustive palette search.
//!
//! Colorings are enumerated over a fixed edge order with the first-use rule:
//! the color at position `i` is at most one more than the largest color at
//! positions before `i`. Every coloring is a color permutation of exactly one
//! such canonical coloring, so nothing is lost and nothing is repeated.

use std::ops::ControlFlow;

use itertools::Itertools;

use crate::coloring::{SubtreeSearch, TreeKind};
use crate::error::Result;
use crate::graph::{bridge_stats, vec_to_mask, EdgeId, Graph};

/// Canonical colorings of `m` slots using colors from `1..=palette`.
pub fn canonical_colorings(m: usize, palette: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let constraints = vec![Vec::new(); m];
    let _ = Canonical { palette, exact: false, must_differ: &constraints }.for_each(|c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// The enumerator. `must_differ[i]` lists earlier positions whose color must
/// differ from position `i`; with `exact` set, only colorings that use every
/// palette color are produced.
pub(crate) struct Canonical<'a> {
    pub palette: usize,
    pub exact: bool,
    pub must_differ: &'a [Vec<usize>],
}

impl Canonical<'_> {
    pub(crate) fn for_each<F>(&self, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let m = self.must_differ.len();
        let mut colors = vec![0; m];
        self.rec(0, 0, &mut colors, &mut visit)
    }

    fn rec<F>(&self, pos: usize, top: usize, colors: &mut [usize], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let m = colors.len();
        if pos == m {
            if self.exact && top < self.palette {
                return ControlFlow::Continue(());
            }
            return visit(colors);
        }
        // Not enough positions left to introduce the missing colors.
        if self.exact && top + (m - pos) < self.palette {
            return ControlFlow::Continue(());
        }
        for c in 1..=self.palette.min(top + 1) {
            if self.must_differ[pos].iter().any(|&j| colors[j] == c) {
                continue;
            }
            colors[pos] = c;
            self.rec(pos + 1, top.max(c), colors, visit)?;
        }
        ControlFlow::Continue(())
    }
}

/// Result of exhausting (or not) one palette.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaletteOutcome {
    /// Colors by edge id of the first valid coloring met, if any.
    pub found: Option<Vec<usize>>,
    /// Complete canonical colorings handed to the subset checker.
    pub examined: u64,
}

/// Everything about (G, k, kind) the palette search reuses across palettes.
pub(crate) struct PaletteSearch<'g> {
    g: &'g Graph,
    trees: SubtreeSearch<'g>,
    /// `order[pos]` is the edge colored at position `pos`.
    order: Vec<EdgeId>,
    must_differ: Vec<Vec<usize>>,
    subsets: Vec<u64>,
}

impl<'g> PaletteSearch<'g> {
    pub(crate) fn new(g: &'g Graph, k: usize, kind: TreeKind) -> Result<Self> {
        let trees = SubtreeSearch::new(g, kind)?;
        let deg = |v: usize| g.degree(v);
        let hub = (0..g.n()).max_by_key(|&v| (deg(v), std::cmp::Reverse(v))).unwrap_or(0);

        // Edges at high-degree vertices first.
        let mut order: Vec<EdgeId> = (0..g.m()).collect();
        order.sort_by_key(|&e| {
            let (u, v) = g.edge(e);
            (std::cmp::Reverse(deg(u).max(deg(v))), e)
        });
        let mut pos_of = vec![0; g.m()];
        for (p, &e) in order.iter().enumerate() {
            pos_of[e] = p;
        }

        // Two bridges at one vertex lie on every tree joining their far ends.
        let bridges = bridge_stats(g)?;
        let mut is_bridge = vec![false; g.m()];
        for &e in &bridges.bridges {
            is_bridge[e] = true;
        }
        let mut must_differ = vec![Vec::new(); g.m()];
        for v in 0..g.n() {
            let at: Vec<usize> =
                g.neighbors(v).iter().filter(|&&(_, e)| is_bridge[e]).map(|&(_, e)| pos_of[e]).collect();
            for (&a, &b) in at.iter().tuple_combinations() {
                let (lo, hi) = (a.min(b), a.max(b));
                must_differ[hi].push(lo);
            }
        }

        // Subsets through the hub first; they fail earliest on star-like graphs.
        let mut subsets: Vec<u64> = (0..g.n()).combinations(k).map(|s| vec_to_mask(&s)).collect();
        subsets.sort_by_key(|&s| s >> hub & 1 == 0);

        Ok(PaletteSearch { g, trees, order, must_differ, subsets })
    }

    pub(crate) fn edge_order(&self) -> &[EdgeId] {
        &self.order
    }

    /// Searches colorings using exactly `palette` colors, returning the first
    /// valid one in enumeration order.
    pub(crate) fn run(&self, palette: usize) -> PaletteOutcome {
        let m = self.g.m();
        let mut examined = 0u64;
        let mut found = None;
        let mut bits = vec![0u64; m];
        // Move-to-front: a subset that just failed is tried first next time.
        let mut subsets = self.subsets.clone();
        let enumerator = Canonical { palette, exact: true, must_differ: &self.must_differ };
        let _ = enumerator.for_each(|colors| {
            examined += 1;
            for (p, &c) in colors.iter().enumerate() {
                bits[self.order[p]] = 1u64 << (c - 1);
            }
            match subsets.iter().position(|&s| !self.trees.exists(&bits, s)) {
                Some(i) => {
                    subsets[..=i].rotate_right(1);
                    ControlFlow::Continue(())
                }
                None => {
                    let mut by_edge = vec![0; m];
                    for (p, &c) in colors.iter().enumerate() {
                        by_edge[self.order[p]] = c;
                    }
                    found = Some(by_edge);
                    ControlFlow::Break(())
                }
            }
        });
        PaletteOutcome { found, examined }
    }
}
