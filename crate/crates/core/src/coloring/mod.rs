// SPDX-License-Identifier: Apache-2.0

//! Edge colorings and the proper/rainbow tree predicates every result in the
//! crate is checked against.

mod edge_chromatic;
mod steiner;
mod verify;

pub use edge_chromatic::{chi_prime, color_spanning_tree, proper_edge_color_tree, ChiPrimeResult};
pub(crate) use steiner::SubtreeSearch;
pub use steiner::{proper_s_tree_exists, rainbow_s_tree_exists, s_tree_exists, TREE_SEARCH_MAX_N};
pub(crate) use verify::check_k;
pub use verify::{verify_k, verify_k_proper, verify_k_rainbow, Verification};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{tree_vertex_mask, EdgeId, Graph, VertexId};

/// Largest palette the bitmask searches can represent.
pub const MAX_PALETTE: usize = 64;

/// Which tree condition an S-tree must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeKind {
    /// Adjacent tree edges differ in color.
    Proper,
    /// All tree edges differ in color.
    Rainbow,
}

/// A color in `1..=palette` for every edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct EdgeColoring {
    colors: Vec<usize>,
    palette: usize,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    colors: Vec<usize>,
    palette: usize,
}

impl TryFrom<RawColoring> for EdgeColoring {
    type Error = Error;
    fn try_from(raw: RawColoring) -> Result<Self> {
        EdgeColoring::new(raw.colors, raw.palette)
    }
}

impl From<EdgeColoring> for RawColoring {
    fn from(c: EdgeColoring) -> Self {
        RawColoring { colors: c.colors, palette: c.palette }
    }
}

impl EdgeColoring {
    pub fn new(colors: Vec<usize>, palette: usize) -> Result<Self> {
        if palette > MAX_PALETTE {
            return Err(Error::InvalidColoring(format!("palette {palette} exceeds {MAX_PALETTE}")));
        }
        if let Some((e, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > palette) {
            return Err(Error::InvalidColoring(format!("edge {e} has color {c}, outside 1..={palette}")));
        }
        Ok(EdgeColoring { colors, palette })
    }

    /// Palette just large enough for the colors present.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        let palette = colors.iter().copied().max().unwrap_or(0);
        EdgeColoring::new(colors, palette)
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.colors[e]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        self.colors.iter().fold(0u64, |acc, &c| acc | 1 << (c - 1)).count_ones() as usize
    }

    /// Errors unless there is exactly one color per edge of `g`.
    pub fn check_fits(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::InvalidColoring(format!("{} colors for {} edges", self.colors.len(), g.m())));
        }
        Ok(())
    }

    /// True iff no two incident edges share a color.
    pub fn is_proper_edge_coloring(&self, g: &Graph) -> bool {
        (0..g.n()).all(|v| {
            let mut seen = 0u64;
            g.neighbors(v).iter().all(|&(_, e)| {
                let bit = 1u64 << (self.colors[e] - 1);
                let fresh = seen & bit == 0;
                seen |= bit;
                fresh
            })
        })
    }

    /// Color bits (`1 << (color - 1)`) per edge, the form the searches use.
    pub(crate) fn bits(&self) -> Vec<u64> {
        self.colors.iter().map(|&c| 1u64 << (c - 1)).collect()
    }
}

/// A tree certifying one vertex set: `s` is covered by the endpoints of
/// `tree_edges`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeWitness {
    pub s: Vec<VertexId>,
    pub tree_edges: Vec<EdgeId>,
}

impl TreeWitness {
    /// Re-checks shape, coverage and the color condition from scratch.
    pub fn check(&self, g: &Graph, col: &EdgeColoring, kind: TreeKind) -> Result<bool> {
        let covered = tree_vertex_mask(g, &self.tree_edges)?;
        if self.s.iter().any(|&v| v >= g.n() || covered >> v & 1 == 0) {
            return Ok(false);
        }
        tree_satisfies(g, col, &self.tree_edges, kind)
    }
}

fn tree_satisfies(g: &Graph, col: &EdgeColoring, edges: &[EdgeId], kind: TreeKind) -> Result<bool> {
    col.check_fits(g)?;
    tree_vertex_mask(g, edges)?;
    Ok(match kind {
        TreeKind::Proper => {
            let mut at = vec![0u64; g.n()];
            edges.iter().all(|&e| {
                let (u, v) = g.edge(e);
                let bit = 1u64 << (col.color(e) - 1);
                let ok = at[u] & bit == 0 && at[v] & bit == 0;
                at[u] |= bit;
                at[v] |= bit;
                ok
            })
        }
        TreeKind::Rainbow => {
            let mut seen = 0u64;
            edges.iter().all(|&e| {
                let bit = 1u64 << (col.color(e) - 1);
                let ok = seen & bit == 0;
                seen |= bit;
                ok
            })
        }
    })
}

/// True iff no two tree edges sharing an endpoint share a color.
/// Errors when `tree_edges` is not a tree of `g`.
pub fn is_proper_tree(g: &Graph, col: &EdgeColoring, tree_edges: &[EdgeId]) -> Result<bool> {
    tree_satisfies(g, col, tree_edges, TreeKind::Proper)
}

/// True iff all tree edges carry distinct colors.
pub fn is_rainbow_tree(g: &Graph, col: &EdgeColoring, tree_edges: &[EdgeId]) -> Result<bool> {
    tree_satisfies(g, col, tree_edges, TreeKind::Rainbow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn col(c: &[usize]) -> EdgeColoring {
        EdgeColoring::from_colors(c.to_vec()).unwrap()
    }

    #[test]
    fn single_edge_is_vacuously_proper_and_rainbow() {
        let g = path(2);
        assert!(is_proper_tree(&g, &col(&[1]), &[0]).unwrap());
        assert!(is_rainbow_tree(&g, &col(&[1]), &[0]).unwrap());
    }

    #[test]
    fn monochromatic_p3_is_not_proper() {
        assert!(!is_proper_tree(&path(3), &col(&[1, 1]), &[0, 1]).unwrap());
    }

    #[test]
    fn star_with_distinct_colors_is_proper() {
        let k13 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_proper_tree(&k13, &col(&[1, 2, 3]), &[0, 1, 2]).unwrap());
    }

    #[test]
    fn proper_but_not_rainbow() {
        let p4 = path(4);
        let c = col(&[1, 2, 1]);
        assert!(!is_rainbow_tree(&p4, &c, &[0, 1, 2]).unwrap());
        assert!(is_proper_tree(&p4, &c, &[0, 1, 2]).unwrap());
        assert!(is_rainbow_tree(&path(3), &col(&[1, 2]), &[0, 1]).unwrap());
    }

    #[test]
    fn non_trees_are_errors() {
        let c3 = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = col(&[1, 2, 3]);
        assert_eq!(is_proper_tree(&c3, &c, &[0, 1, 2]), Err(Error::NotATree));
        assert_eq!(is_rainbow_tree(&c3, &c, &[]), Err(Error::NotATree));
    }

    #[test]
    fn coloring_range_is_enforced() {
        assert!(EdgeColoring::new(vec![1, 0], 2).is_err());
        assert!(EdgeColoring::new(vec![1, 3], 2).is_err());
        let c = EdgeColoring::new(vec![1, 1], 3).unwrap();
        assert_eq!(c.used_colors(), 1);
        assert_eq!(c.palette(), 3);
    }

    #[test]
    fn serde_rejects_out_of_range() {
        let bad = r#"{"colors":[1,4],"palette":3}"#;
        assert!(serde_json::from_str::<EdgeColoring>(bad).is_err());
        let ok = r#"{"colors":[1,3],"palette":3}"#;
        assert_eq!(serde_json::from_str::<EdgeColoring>(ok).unwrap().colors(), &[1, 3]);
    }
}
