// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;

use super::{EdgeColoring, SubtreeSearch, TreeKind, TreeWitness};
use crate::error::{Error, Result};
use crate::graph::{vec_to_mask, Graph, VertexId};

/// Outcome of checking every k-subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    /// Every k-subset has a tree; one smallest witness per subset.
    Valid { witnesses: BTreeMap<Vec<VertexId>, TreeWitness> },
    /// The lexicographically first k-subset without a tree.
    Invalid { failing: Vec<VertexId> },
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid { .. })
    }
}

pub(crate) fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k < 2 || k > g.n() {
        return Err(Error::InvalidK { k, min: 2, n: g.n() });
    }
    Ok(())
}

/// Checks that every k-subset of vertices has a tree of `kind` under `col`.
///
/// Subsets are examined concurrently; the reported failure is always the
/// lexicographically first one.
pub fn verify_k(g: &Graph, col: &EdgeColoring, k: usize, kind: TreeKind) -> Result<Verification> {
    g.require_connected()?;
    let search = SubtreeSearch::new(g, kind)?;
    col.check_fits(g)?;
    check_k(g, k)?;
    let bits = col.bits();
    let subsets: Vec<Vec<VertexId>> = (0..g.n()).combinations(k).collect();
    if let Some(failing) = subsets.par_iter().find_first(|s| !search.exists(&bits, vec_to_mask(s))) {
        return Ok(Verification::Invalid { failing: failing.clone() });
    }
    let witnesses: Vec<TreeWitness> =
        subsets.par_iter().map(|s| search.smallest_witness(&bits, s).expect("existence checked")).collect();
    Ok(Verification::Valid { witnesses: subsets.into_iter().zip(witnesses).collect() })
}

/// Is `col` a k-proper coloring of `g`?
pub fn verify_k_proper(g: &Graph, col: &EdgeColoring, k: usize) -> Result<Verification> {
    verify_k(g, col, k, TreeKind::Proper)
}

/// Is `col` a k-rainbow coloring of `g`?
pub fn verify_k_rainbow(g: &Graph, col: &EdgeColoring, k: usize) -> Result<Verification> {
    verify_k(g, col, k, TreeKind::Rainbow)
}
