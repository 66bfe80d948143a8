// SPDX-License-Identifier: Apache-2.0

//! Lower and upper bounds on the k-proper and k-rainbow indices.

use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::coloring::{check_k, chi_prime, TreeKind};
use crate::error::{Error, Result};
use crate::graph::{
    bridge_stats, for_each_spanning_tree, hamilton_path, EdgeId, Graph, TreeWalk, DEFAULT_SPANNING_TREE_CAP,
    HAMILTON_MAX_N,
};

/// Which fact a bound instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    /// k = 2 on a complete graph: one color suffices, at least one is needed.
    #[serde(rename = "trivial-1")]
    Trivial1,
    /// Some tree needs an internal vertex, whose edges need two colors.
    #[serde(rename = "trivial-2")]
    Trivial2,
    /// Bridges at a common vertex need pairwise distinct colors.
    #[serde(rename = "bridge-b")]
    BridgeB,
    /// The index is nondecreasing in k.
    #[serde(rename = "monotonic-from-smaller-k")]
    MonotonicFromSmallerK,
    /// A proper edge coloring makes every tree proper.
    #[serde(rename = "chi-prime")]
    ChiPrime,
    /// Vizing's upper bound on the edge-chromatic number.
    #[serde(rename = "delta-plus-1")]
    DeltaPlus1,
    /// Any spanning tree has maximum degree at most Δ(G).
    #[serde(rename = "delta")]
    Delta,
    /// A spanning tree T can be colored properly with Δ(T) colors.
    #[serde(rename = "min-spanning-tree-delta")]
    MinSpanningTreeDelta,
    /// A spanning tree with all edges distinct is a rainbow tree for every S.
    #[serde(rename = "n-1")]
    NMinus1,
    /// A Hamilton path colored alternately.
    #[serde(rename = "traceable-2")]
    Traceable2,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string tag"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: usize,
    pub provenance: Provenance,
    /// Only for `min-spanning-tree-delta`: false when the tree stream was capped.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
}

impl Bound {
    fn new(value: usize, provenance: Provenance) -> Self {
        Bound { value, provenance, exact: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub index: TreeKind,
    pub k: usize,
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
    pub best_lower: usize,
    pub best_upper: usize,
}

impl BoundsReport {
    pub fn is_closed(&self) -> bool {
        self.best_lower == self.best_upper
    }

    /// First lower bound attaining `best_lower`.
    pub fn best_lower_bound(&self) -> &Bound {
        self.lower.iter().find(|b| b.value == self.best_lower).expect("nonempty lower list")
    }
}

/// Minimum over spanning trees of the maximum degree, with one minimizing tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinTreeDelta {
    pub value: usize,
    /// False when the spanning-tree stream hit its cap.
    pub exact: bool,
    pub tree: Vec<EdgeId>,
}

/// Smallest Δ(T) over spanning trees T, with the default stream cap.
pub fn min_spanning_tree_delta(g: &Graph) -> Result<MinTreeDelta> {
    min_spanning_tree_delta_capped(g, DEFAULT_SPANNING_TREE_CAP)
}

pub fn min_spanning_tree_delta_capped(g: &Graph, cap: usize) -> Result<MinTreeDelta> {
    g.require_connected()?;
    let n = g.n();
    if n == 1 {
        return Ok(MinTreeDelta { value: 0, exact: true, tree: vec![] });
    }
    // No tree on n >= 3 vertices has Δ < 2, so a Hamilton path is optimal.
    if n <= HAMILTON_MAX_N {
        if let Some(path) = hamilton_path(g)? {
            let tree = path.windows(2).map(|w| g.edge_between(w[0], w[1]).expect("path edge")).collect();
            return Ok(MinTreeDelta { value: if n >= 3 { 2 } else { 1 }, exact: true, tree });
        }
    }
    let floor = if n >= 3 { 2 } else { 1 };
    let mut best = usize::MAX;
    let mut best_tree = Vec::new();
    let mut deg = vec![0usize; n];
    let walk = for_each_spanning_tree(g, cap, |t| {
        deg.iter_mut().for_each(|d| *d = 0);
        for &e in t {
            let (u, v) = g.edge(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        let d = *deg.iter().max().unwrap();
        if d < best {
            best = d;
            best_tree = t.to_vec();
        }
        if best == floor {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(MinTreeDelta { value: best, exact: !matches!(walk, TreeWalk::Capped { .. }), tree: best_tree })
}

/// Caller-supplied monotonicity fact: the index at a smaller k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonotoneHint {
    pub k: usize,
    pub value: usize,
}

/// Lower bounds valid for both indices.
fn lower_bounds(g: &Graph, k: usize, hint: Option<MonotoneHint>) -> Result<Vec<Bound>> {
    let mut lower = Vec::new();
    if k >= 3 || !g.is_complete() {
        lower.push(Bound::new(2, Provenance::Trivial2));
    } else {
        lower.push(Bound::new(1, Provenance::Trivial1));
    }
    let b = bridge_stats(g)?.max;
    if b > 0 {
        lower.push(Bound::new(b, Provenance::BridgeB));
    }
    if let Some(h) = hint {
        if h.k < k {
            lower.push(Bound::new(h.value, Provenance::MonotonicFromSmallerK));
        }
    }
    Ok(lower)
}

fn finish(index: TreeKind, k: usize, lower: Vec<Bound>, upper: Vec<Bound>) -> Result<BoundsReport> {
    let best_lower = lower.iter().map(|b| b.value).max().expect("trivial bound present");
    let best_upper = upper.iter().map(|b| b.value).min().expect("n-1 bound present");
    if best_lower > best_upper {
        return Err(Error::BracketViolation { lower: best_lower, upper: best_upper, detail: "bounds cross".into() });
    }
    Ok(BoundsReport { index, k, lower, upper, best_lower, best_upper })
}

/// Every bound on px_k(G) this crate knows how to compute.
pub fn bounds(g: &Graph, k: usize) -> Result<BoundsReport> {
    bounds_with_hint(g, k, None)
}

pub fn bounds_with_hint(g: &Graph, k: usize, hint: Option<MonotoneHint>) -> Result<BoundsReport> {
    g.require_connected()?;
    check_k(g, k)?;
    let lower = lower_bounds(g, k, hint)?;
    let n = g.n();
    let delta = g.max_degree();
    let mut upper = Vec::new();
    match chi_prime(g) {
        Ok(r) => upper.push(Bound::new(r.chi_prime, Provenance::ChiPrime)),
        Err(Error::SizeCap { .. }) => {}
        Err(e) => return Err(e),
    }
    upper.push(Bound::new(delta + 1, Provenance::DeltaPlus1));
    upper.push(Bound::new(delta, Provenance::Delta));
    let mst = min_spanning_tree_delta(g)?;
    upper.push(Bound { value: mst.value, provenance: Provenance::MinSpanningTreeDelta, exact: Some(mst.exact) });
    upper.push(Bound::new(n - 1, Provenance::NMinus1));
    if (3..=HAMILTON_MAX_N).contains(&n) && hamilton_path(g)?.is_some() {
        upper.push(Bound::new(2, Provenance::Traceable2));
    }
    finish(TreeKind::Proper, k, lower, upper)
}

/// Bounds on rx_k(G). Lower bounds on px_k carry over since rainbow trees
/// are proper; the only general upper bound is n - 1.
pub fn rainbow_bounds(g: &Graph, k: usize) -> Result<BoundsReport> {
    g.require_connected()?;
    check_k(g, k)?;
    let lower = lower_bounds(g, k, None)?;
    let upper = vec![Bound::new(g.n() - 1, Provenance::NMinus1)];
    finish(TreeKind::Rainbow, k, lower, upper)
}

pub fn bounds_for(g: &Graph, k: usize, kind: TreeKind) -> Result<BoundsReport> {
    match kind {
        TreeKind::Proper => bounds(g, k),
        TreeKind::Rainbow => rainbow_bounds(g, k),
    }
}
