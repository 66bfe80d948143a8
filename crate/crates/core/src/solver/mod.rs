// SPDX-License-Identifier: Apache-2.0

//! Exact k-proper and k-rainbow indices of small graphs.
//!
//! The bounds bracket `[best_lower, best_upper]` is searched from the bottom.
//! Palette `c` is searched over canonical colorings that use all `c` colors;
//! smaller palettes are covered either by earlier searches or by the lower
//! bound. When every palette below `best_upper` fails, the upper bound is
//! realized by the coloring its own argument builds.

mod bounds;
mod certificate;
mod search;

use std::collections::VecDeque;

pub use bounds::{
    bounds, bounds_for, bounds_with_hint, min_spanning_tree_delta, min_spanning_tree_delta_capped, rainbow_bounds,
    Bound, BoundsReport, MinTreeDelta, MonotoneHint, Provenance,
};
pub use certificate::{
    check_certificate, recheck_exhaustion, reproduces, CheckFailure, LowerEvidence, PaletteExhaustion, PxCertificate,
    SCHEMA_VERSION,
};
pub use search::{canonical_colorings, PaletteOutcome};

use crate::coloring::{chi_prime, verify_k, EdgeColoring, TreeKind, Verification};
use crate::constructions::{color_traceable, color_via_spanning_tree};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

pub(crate) use search::PaletteSearch;

/// Largest n the exact solver accepts.
pub const SOLVE_MAX_N: usize = 8;

/// px_k(G) with a checkable certificate.
pub fn solve_px(g: &Graph, k: usize) -> Result<PxCertificate> {
    solve(g, k, TreeKind::Proper)
}

/// rx_k(G) with a checkable certificate.
pub fn solve_rx(g: &Graph, k: usize) -> Result<PxCertificate> {
    solve(g, k, TreeKind::Rainbow)
}

pub fn solve(g: &Graph, k: usize, kind: TreeKind) -> Result<PxCertificate> {
    if g.n() > SOLVE_MAX_N {
        return Err(Error::SizeCap { what: "exact solve", limit: SOLVE_MAX_N, n: g.n() });
    }
    let report = bounds_for(g, k, kind)?;
    let bound = report.best_lower_bound().clone();
    let search = PaletteSearch::new(g, k, kind)?;
    let mut exhausted = Vec::new();
    let mut found = None;
    for palette in report.best_lower..report.best_upper {
        let out = search.run(palette);
        match out.found {
            Some(colors) => {
                found = Some((palette, EdgeColoring::new(colors, palette)?));
                break;
            }
            None => exhausted.push(PaletteExhaustion { palette, colorings_examined: out.examined }),
        }
    }
    let (value, coloring) = match found {
        Some(hit) => hit,
        None => (report.best_upper, realize_upper(g, kind, &report)?),
    };
    let violation =
        |detail: String| Error::BracketViolation { lower: report.best_lower, upper: report.best_upper, detail };
    if coloring.used_colors() != value {
        return Err(violation(format!("coloring for value {value} uses {} colors", coloring.used_colors())));
    }
    let witnesses = match verify_k(g, &coloring, k, kind)? {
        Verification::Valid { witnesses } => witnesses,
        Verification::Invalid { failing } => {
            return Err(violation(format!("coloring for value {value} fails at S = {failing:?}")));
        }
    };
    Ok(PxCertificate {
        index: kind,
        graph: g.clone(),
        k,
        value,
        coloring,
        witnesses,
        lower_evidence: LowerEvidence { bound: Bound { exact: None, ..bound }, exhausted },
    })
}

/// Coloring with `best_upper` colors built by the argument behind the bound.
fn realize_upper(g: &Graph, kind: TreeKind, report: &BoundsReport) -> Result<EdgeColoring> {
    let target = report.best_upper;
    if kind == TreeKind::Rainbow {
        return rainbow_spanning_tree(g);
    }
    let attains = |p: Provenance| report.upper.iter().any(|b| b.provenance == p && b.value == target);
    if attains(Provenance::Traceable2) {
        return color_traceable(g);
    }
    // Δ, Δ+1 and n-1 all dominate the minimum spanning-tree degree.
    let mst = min_spanning_tree_delta(g)?;
    if mst.value == target {
        return color_via_spanning_tree(g, &mst.tree);
    }
    if attains(Provenance::ChiPrime) {
        return Ok(chi_prime(g)?.witness);
    }
    Err(Error::BracketViolation {
        lower: report.best_lower,
        upper: target,
        detail: "no construction attains the upper bound".into(),
    })
}

/// A breadth-first spanning tree with colors 1..=n-1; other edges get 1.
fn rainbow_spanning_tree(g: &Graph) -> Result<EdgeColoring> {
    let mut colors = vec![0; g.m()];
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut next = 1;
    while let Some(u) = queue.pop_front() {
        for &(v, e) in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                colors[e] = next;
                next += 1;
                queue.push_back(v);
            }
        }
    }
    for c in colors.iter_mut().filter(|c| **c == 0) {
        *c = 1;
    }
    EdgeColoring::new(colors, g.n() - 1)
}

/// Edge order used by the palette search for (g, k, kind).
pub fn search_edge_order(g: &Graph, k: usize, kind: TreeKind) -> Result<Vec<EdgeId>> {
    crate::coloring::check_k(g, k)?;
    Ok(PaletteSearch::new(g, k, kind)?.edge_order().to_vec())
}
