// SPDX-License-Identifier: Apache-2.0

//! Certificates for exact index values and their checker.
//!
//! A certificate claims `index_k(G) = value`. The upper half of the claim is
//! a coloring with `value` colors plus one tree per k-subset; the lower half
//! is a recomputable bound plus a record of every palette between that bound
//! and `value` that was searched without success.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::bounds::{Bound, Provenance};
use super::PaletteSearch;
use crate::coloring::{EdgeColoring, SubtreeSearch, TreeKind, TreeWitness, TREE_SEARCH_MAX_N};
use crate::error::{Error, Result};
use crate::graph::{bridge_stats, encode_graph6, parse_graph6, Graph, VertexId};

/// Version of the JSON layout written by [`PxCertificate::to_json`].
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaletteExhaustion {
    pub palette: usize,
    /// Canonical colorings using all `palette` colors that reached the
    /// subset check; none passed.
    pub colorings_examined: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerEvidence {
    /// Rules out every palette below `bound.value`.
    pub bound: Bound,
    /// Palettes `bound.value..value`, each searched without success.
    pub exhausted: Vec<PaletteExhaustion>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PxCertificate {
    pub index: TreeKind,
    /// Edge ids of the certificate are the edge ids of this graph.
    pub graph: Graph,
    pub k: usize,
    pub value: usize,
    pub coloring: EdgeColoring,
    pub witnesses: BTreeMap<Vec<VertexId>, TreeWitness>,
    pub lower_evidence: LowerEvidence,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    schema_version: u32,
    index: TreeKind,
    graph6: String,
    n: usize,
    m: usize,
    edges: Vec<[VertexId; 2]>,
    k: usize,
    value: usize,
    coloring: Vec<usize>,
    witnesses: BTreeMap<String, Vec<usize>>,
    lower_evidence: LowerEvidence,
}

fn subset_key(s: &[VertexId]) -> String {
    s.iter().join(",")
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedCertificate(msg.into())
}

impl PxCertificate {
    /// Pretty-printed JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.wire()).expect("certificate serializes")
    }

    /// JSON on a single line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.wire()).expect("certificate serializes")
    }

    fn wire(&self) -> Wire {
        Wire {
            schema_version: SCHEMA_VERSION,
            index: self.index,
            graph6: encode_graph6(&self.graph),
            n: self.graph.n(),
            m: self.graph.m(),
            edges: self.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            k: self.k,
            value: self.value,
            coloring: self.coloring.colors().to_vec(),
            witnesses: self.witnesses.iter().map(|(s, w)| (subset_key(s), w.tree_edges.clone())).collect(),
            lower_evidence: self.lower_evidence.clone(),
        }
    }

    /// Parses a certificate. Only structural problems are errors here;
    /// whether the claims hold is for [`check_certificate`] to decide.
    pub fn from_json(text: &str) -> Result<PxCertificate> {
        let wire: Wire = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
        if wire.schema_version != SCHEMA_VERSION {
            return Err(malformed(format!("unsupported schema_version {}", wire.schema_version)));
        }
        let graph = Graph::from_edges(wire.n, wire.edges.iter().map(|&[u, v]| (u, v)))?;
        if graph.m() != wire.m {
            return Err(malformed(format!("m = {} but {} edges listed", wire.m, graph.m())));
        }
        // The explicit edge list fixes edge ids; it must describe the same graph.
        let encoded = parse_graph6(&wire.graph6)?;
        let mut listed = graph.edges().to_vec();
        listed.sort_unstable();
        if encoded.n() != graph.n() || encoded.edges() != listed.as_slice() {
            return Err(malformed("edge list does not match graph6"));
        }
        let coloring = EdgeColoring::from_colors(wire.coloring)?;
        let mut witnesses = BTreeMap::new();
        for (key, tree_edges) in wire.witnesses {
            let s = key
                .split(',')
                .map(|x| x.trim().parse::<VertexId>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| malformed(format!("witness key {key:?} is not a vertex list")))?;
            witnesses.insert(s.clone(), TreeWitness { s, tree_edges });
        }
        Ok(PxCertificate {
            index: wire.index,
            graph,
            k: wire.k,
            value: wire.value,
            coloring,
            witnesses,
            lower_evidence: wire.lower_evidence,
        })
    }
}

/// First reason a certificate is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckFailure {
    Disconnected,
    KOutOfRange {
        k: usize,
        n: usize,
    },
    ColoringLength {
        colors: usize,
        edges: usize,
    },
    /// Colors must be exactly `1..=value`.
    ColorsUsed {
        value: usize,
        used: usize,
        max: usize,
    },
    MissingWitness {
        s: Vec<VertexId>,
    },
    UnexpectedWitness {
        s: Vec<VertexId>,
    },
    /// The witness for `s` is not a tree covering `s` with the index's
    /// color condition.
    BadWitness {
        s: Vec<VertexId>,
    },
    /// The witness for `s` differs from the canonical smallest one.
    NonCanonicalWitness {
        s: Vec<VertexId>,
    },
    LowerBound(String),
    Exhaustion(String),
    NotReproduced(String),
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckFailure::Disconnected => write!(f, "graph is disconnected"),
            CheckFailure::KOutOfRange { k, n } => write!(f, "k = {k} is outside 2..={n}"),
            CheckFailure::ColoringLength { colors, edges } => {
                write!(f, "coloring has {colors} entries for {edges} edges")
            }
            CheckFailure::ColorsUsed { value, used, max } => {
                write!(f, "value {value} but coloring uses {used} colors with maximum {max}")
            }
            CheckFailure::MissingWitness { s } => write!(f, "no witness for S = {}", subset_key(s)),
            CheckFailure::UnexpectedWitness { s } => write!(f, "witness for non-k-subset {}", subset_key(s)),
            CheckFailure::BadWitness { s } => write!(f, "witness fails for S = {}", subset_key(s)),
            CheckFailure::NonCanonicalWitness { s } => {
                write!(f, "witness for S = {} is not the canonical smallest tree", subset_key(s))
            }
            CheckFailure::LowerBound(msg) => write!(f, "lower bound: {msg}"),
            CheckFailure::Exhaustion(msg) => write!(f, "exhaustion record: {msg}"),
            CheckFailure::NotReproduced(msg) => write!(f, "not reproduced: {msg}"),
        }
    }
}

impl CheckFailure {
    /// The vertex set the failure is about, if any.
    pub fn subset(&self) -> Option<&[VertexId]> {
        match self {
            CheckFailure::MissingWitness { s }
            | CheckFailure::UnexpectedWitness { s }
            | CheckFailure::BadWitness { s }
            | CheckFailure::NonCanonicalWitness { s } => Some(s),
            _ => None,
        }
    }
}

/// Checks everything a certificate claims except the exhaustion counts.
///
/// Witness trees are re-validated from their edge lists alone; the lower
/// bound is recomputed from bridges and completeness. `Ok(None)` means the
/// certificate is valid.
pub fn check_certificate(cert: &PxCertificate) -> Result<Option<CheckFailure>> {
    let g = &cert.graph;
    let n = g.n();
    if n > TREE_SEARCH_MAX_N {
        return Err(Error::SizeCap { what: "certificate check", limit: TREE_SEARCH_MAX_N, n });
    }
    if !g.is_connected() {
        return Ok(Some(CheckFailure::Disconnected));
    }
    let k = cert.k;
    if k < 2 || k > n {
        return Ok(Some(CheckFailure::KOutOfRange { k, n }));
    }
    let col = &cert.coloring;
    if col.colors().len() != g.m() {
        return Ok(Some(CheckFailure::ColoringLength { colors: col.colors().len(), edges: g.m() }));
    }

    let subsets: Vec<Vec<VertexId>> = (0..n).combinations(k).collect();
    for s in &subsets {
        if !cert.witnesses.contains_key(s) {
            return Ok(Some(CheckFailure::MissingWitness { s: s.clone() }));
        }
    }
    if let Some(s) =
        cert.witnesses.keys().find(|s| s.len() != k || !s.windows(2).all(|w| w[0] < w[1]) || s.iter().any(|&v| v >= n))
    {
        return Ok(Some(CheckFailure::UnexpectedWitness { s: s.clone() }));
    }
    for s in &subsets {
        let w = &cert.witnesses[s];
        let ok = w.tree_edges.iter().all(|&e| e < g.m()) && w.check(g, col, cert.index).unwrap_or(false);
        if !ok {
            return Ok(Some(CheckFailure::BadWitness { s: s.clone() }));
        }
    }
    let max = col.colors().iter().copied().max().unwrap_or(0);
    if col.used_colors() != cert.value || max != cert.value {
        return Ok(Some(CheckFailure::ColorsUsed { value: cert.value, used: col.used_colors(), max }));
    }
    let search = SubtreeSearch::new(g, cert.index)?;
    let bits: Vec<u64> = col.colors().iter().map(|&c| 1u64 << (c - 1)).collect();
    for s in &subsets {
        let canonical = search.smallest_witness(&bits, s).map(|w| w.tree_edges);
        let mut given = cert.witnesses[s].tree_edges.clone();
        given.sort_unstable();
        if canonical.as_ref() != Some(&given) {
            return Ok(Some(CheckFailure::NonCanonicalWitness { s: s.clone() }));
        }
    }

    let ev = &cert.lower_evidence;
    let recomputed = match ev.bound.provenance {
        Provenance::Trivial1 if k == 2 && g.is_complete() => 1,
        Provenance::Trivial2 if k >= 3 || !g.is_complete() => 2,
        Provenance::BridgeB => bridge_stats(g)?.max,
        p => return Ok(Some(CheckFailure::LowerBound(format!("{p} is not accepted as lower evidence")))),
    };
    if ev.bound.value != recomputed {
        return Ok(Some(CheckFailure::LowerBound(format!(
            "{} is {recomputed}, certificate says {}",
            ev.bound.provenance, ev.bound.value
        ))));
    }
    if cert.value < recomputed {
        return Ok(Some(CheckFailure::LowerBound(format!("value {} is below the bound {recomputed}", cert.value))));
    }
    let palettes: Vec<usize> = ev.exhausted.iter().map(|x| x.palette).collect();
    let expected: Vec<usize> = (recomputed..cert.value).collect();
    if palettes != expected {
        return Ok(Some(CheckFailure::Exhaustion(format!("palettes {palettes:?} searched, {expected:?} required"))));
    }
    Ok(None)
}

/// Re-runs every recorded palette search and compares outcomes and counts.
pub fn recheck_exhaustion(cert: &PxCertificate) -> Result<Option<CheckFailure>> {
    let search = PaletteSearch::new(&cert.graph, cert.k, cert.index)?;
    for rec in &cert.lower_evidence.exhausted {
        let out = search.run(rec.palette);
        if out.found.is_some() {
            return Ok(Some(CheckFailure::Exhaustion(format!("palette {} admits a valid coloring", rec.palette))));
        }
        if out.examined != rec.colorings_examined {
            return Ok(Some(CheckFailure::Exhaustion(format!(
                "palette {}: {} colorings examined, certificate says {}",
                rec.palette, out.examined, rec.colorings_examined
            ))));
        }
    }
    Ok(None)
}

/// Solves the instance again and compares the result field by field. The
/// solver is deterministic, so an honest certificate always reproduces.
pub fn reproduces(cert: &PxCertificate) -> Result<Option<CheckFailure>> {
    let fresh = super::solve(&cert.graph, cert.k, cert.index)?;
    let field = if fresh.value != cert.value {
        "value"
    } else if fresh.coloring.colors() != cert.coloring.colors() {
        "coloring"
    } else if fresh.witnesses != cert.witnesses {
        "witnesses"
    } else if fresh.lower_evidence != cert.lower_evidence {
        "lower_evidence"
    } else {
        return Ok(None);
    };
    Ok(Some(CheckFailure::NotReproduced(format!("{field} differs from a fresh solve"))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, FamilySpec};
    use crate::solver::{solve_px, solve_rx};

    fn star_plus() -> PxCertificate {
        solve_px(&build(&FamilySpec::StarPlus { n: 5 }).unwrap(), 3).unwrap()
    }

    #[test]
    fn round_trip_and_check() {
        let cert = star_plus();
        let text = cert.to_json();
        let back = PxCertificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(check_certificate(&back).unwrap(), None);
        assert_eq!(recheck_exhaustion(&back).unwrap(), None);
        assert_eq!(reproduces(&back).unwrap(), None);
        assert!(text.contains("\"schema_version\": 1"));
        assert!(text.contains("\"provenance\": \"trivial-2\""));
    }

    #[test]
    fn rainbow_round_trip() {
        let cert = solve_rx(&build(&FamilySpec::Cycle { n: 5 }).unwrap(), 3).unwrap();
        let back = PxCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back.index, TreeKind::Rainbow);
        assert_eq!(check_certificate(&back).unwrap(), None);
    }

    #[test]
    fn recolored_edge_names_a_subset() {
        let mut cert = star_plus();
        let mut colors = cert.coloring.colors().to_vec();
        // Edges 2 and 3 are bridges at the hub; one color for both breaks {0, 3, 4}.
        colors[3] = colors[2];
        cert.coloring = EdgeColoring::from_colors(colors).unwrap();
        let failure = check_certificate(&cert).unwrap().unwrap();
        assert_eq!(failure, CheckFailure::BadWitness { s: vec![0, 3, 4] });
    }

    #[test]
    fn lower_evidence_is_recomputed() {
        let mut cert = star_plus();
        cert.lower_evidence.bound.value = 3;
        cert.lower_evidence.exhausted.clear();
        assert!(matches!(check_certificate(&cert).unwrap(), Some(CheckFailure::LowerBound(_))));

        let mut cert = star_plus();
        cert.lower_evidence.exhausted.clear();
        assert!(matches!(check_certificate(&cert).unwrap(), Some(CheckFailure::Exhaustion(_))));

        let mut cert = star_plus();
        cert.lower_evidence.exhausted[0].colorings_examined += 1;
        assert_eq!(check_certificate(&cert).unwrap(), None);
        assert!(matches!(recheck_exhaustion(&cert).unwrap(), Some(CheckFailure::Exhaustion(_))));
    }

    #[test]
    fn structural_errors() {
        let cert = star_plus();
        let text = cert.to_json().replace("\"graph6\": \"", "\"graph6\": \"D");
        assert!(PxCertificate::from_json(&text).is_err());
        let text = cert.to_json().replace("\"schema_version\": 1", "\"schema_version\": 2");
        assert!(matches!(PxCertificate::from_json(&text), Err(Error::MalformedCertificate(_))));
        assert!(PxCertificate::from_json("{}").is_err());
    }

    #[test]
    fn missing_and_foreign_witnesses() {
        let mut cert = star_plus();
        cert.witnesses.remove(&vec![0, 1, 2]);
        assert_eq!(check_certificate(&cert).unwrap(), Some(CheckFailure::MissingWitness { s: vec![0, 1, 2] }));
        let mut cert = star_plus();
        let w = TreeWitness { s: vec![0, 1], tree_edges: vec![0] };
        cert.witnesses.insert(vec![0, 1], w);
        assert_eq!(check_certificate(&cert).unwrap(), Some(CheckFailure::UnexpectedWitness { s: vec![0, 1] }));
    }
}
