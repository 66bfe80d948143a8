// SPDX-License-Identifier: Apache-2.0

//! Named graph families and the explicit colorings that realize their upper
//! bounds.
//!
//! Star-derived families put the hub at vertex 0 and number leaves from 1.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{color_spanning_tree, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{find_isomorphism, hamilton_path, EdgeId, Graph, VertexId};

/// Where the second added edge of a doubly augmented star sits relative to
/// the first one, `{1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SnppVariant {
    /// Second edge `{3, 4}`.
    Disjoint,
    /// Second edge `{2, 3}`.
    Sharing,
}

impl fmt::Display for SnppVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SnppVariant::Disjoint => "disjoint",
            SnppVariant::Sharing => "sharing",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Hub 0 joined to every other vertex.
    Star {
        n: usize,
    },
    /// Hub 0 joined to the cycle 1, 2, ..., n-1.
    Wheel {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Star plus the edge `{1, 2}`.
    StarPlus {
        n: usize,
    },
    StarPlusPlus {
        n: usize,
        variant: SnppVariant,
    },
    /// Hub 0 joined to 1..=n-2, with the extra vertex n-1 hanging off 1.
    Broom {
        n: usize,
    },
    /// The broom plus one edge; `index` in 1..=3 picks the class in the
    /// order [`unicyclic_broom_variants`] returns them.
    UnicyclicBroomVariant {
        n: usize,
        index: usize,
    },
    /// A tree on b+1 vertices with maximum degree a.
    IndependenceTree {
        a: usize,
        b: usize,
    },
}

/// Family names as accepted on the command line.
pub const FAMILY_TAGS: [&str; 10] = [
    "path",
    "cycle",
    "star",
    "wheel",
    "complete",
    "star-plus",
    "star-plus-plus",
    "broom",
    "unicyclic-broom-variant",
    "independence-tree",
];

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::StarPlus { .. } => "star-plus",
            FamilySpec::StarPlusPlus { .. } => "star-plus-plus",
            FamilySpec::Broom { .. } => "broom",
            FamilySpec::UnicyclicBroomVariant { .. } => "unicyclic-broom-variant",
            FamilySpec::IndependenceTree { .. } => "independence-tree",
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Star { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Complete { n }
            | FamilySpec::StarPlus { n }
            | FamilySpec::StarPlusPlus { n, .. }
            | FamilySpec::Broom { n }
            | FamilySpec::UnicyclicBroomVariant { n, .. } => n,
            FamilySpec::IndependenceTree { b, .. } => b + 1,
        }
    }

    fn validate(&self) -> Result<()> {
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!("{}: {what}", self.tag())))
            }
        };
        let n = self.n();
        need(n <= crate::graph::MAX_VERTICES, "at most 64 vertices")?;
        match *self {
            FamilySpec::Path { .. } | FamilySpec::Star { .. } | FamilySpec::Complete { .. } => {
                need(n >= 2, "requires n >= 2")
            }
            FamilySpec::Cycle { .. } | FamilySpec::StarPlus { .. } => need(n >= 3, "requires n >= 3"),
            FamilySpec::Wheel { .. } => need(n >= 4, "requires n >= 4"),
            FamilySpec::StarPlusPlus { variant: SnppVariant::Disjoint, .. } => {
                need(n >= 5, "disjoint variant requires n >= 5")
            }
            FamilySpec::StarPlusPlus { variant: SnppVariant::Sharing, .. } => {
                need(n >= 4, "sharing variant requires n >= 4")
            }
            FamilySpec::Broom { .. } => need(n >= 5, "requires n >= 5"),
            FamilySpec::UnicyclicBroomVariant { index, .. } => {
                need(n >= 5, "requires n >= 5")?;
                need((1..=3).contains(&index), "index must be 1, 2 or 3")
            }
            FamilySpec::IndependenceTree { a, b } => need(2 <= a && a <= b, "requires 2 <= a <= b"),
        }
    }
}

/// Builds the labeled graph for `spec`.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n();
    let star = |n: usize| (1..n).map(|v| (0, v)).collect::<Vec<_>>();
    let edges: Vec<(VertexId, VertexId)> = match *spec {
        FamilySpec::Path { .. } => (1..n).map(|v| (v - 1, v)).collect(),
        FamilySpec::Cycle { .. } => (0..n).map(|v| (v, (v + 1) % n)).collect(),
        FamilySpec::Star { .. } => star(n),
        FamilySpec::Wheel { .. } => {
            let mut e = star(n);
            e.extend((1..n).map(|v| (v, v % (n - 1) + 1)));
            e
        }
        FamilySpec::Complete { .. } => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        FamilySpec::StarPlus { .. } => {
            let mut e = star(n);
            e.push((1, 2));
            e
        }
        FamilySpec::StarPlusPlus { variant, .. } => {
            let mut e = star(n);
            e.push((1, 2));
            e.push(match variant {
                SnppVariant::Disjoint => (3, 4),
                SnppVariant::Sharing => (2, 3),
            });
            e
        }
        FamilySpec::Broom { .. } => broom_edges(n),
        FamilySpec::UnicyclicBroomVariant { index, .. } => {
            return unicyclic_broom_variants(n).map(|mut v| v.swap_remove(index - 1));
        }
        FamilySpec::IndependenceTree { a, b } => spider_edges(a, b),
    };
    Graph::from_edges(n, edges)
}

fn broom_edges(n: usize) -> Vec<(VertexId, VertexId)> {
    let mut e: Vec<_> = (1..n - 1).map(|v| (0, v)).collect();
    e.push((1, n - 1));
    e
}

/// `a` legs from hub 0 with `b` edges in total, the first `b % a` legs one
/// edge longer than the rest.
fn spider_edges(a: usize, b: usize) -> Vec<(VertexId, VertexId)> {
    let mut e = Vec::with_capacity(b);
    let mut next = 1;
    for leg in 0..a {
        let len = b / a + usize::from(leg < b % a);
        let mut prev = 0;
        for _ in 0..len {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    e
}

/// The classes of single-edge extensions of the broom on `n` vertices that
/// stay at maximum degree n-2 and fall in the adjacent-pair unicyclic case,
/// one representative per isomorphism class, in order of the first added
/// edge (lexicographic) that produces each class.
///
/// Fails with [`Error::VariantCount`] unless there are exactly three.
pub fn unicyclic_broom_variants(n: usize) -> Result<Vec<Graph>> {
    if n < 5 {
        return Err(Error::InvalidFamily("unicyclic-broom-variant: requires n >= 5".into()));
    }
    let g0 = Graph::from_edges(n, broom_edges(n))?;
    let mut reps: Vec<Graph> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g0.has_edge(u, v) {
                continue;
            }
            let g = g0.with_edge(u, v)?;
            if g.max_degree() != n - 2 || unicyclic_case(&g)? != UnicyclicCase::AdjacentPair {
                continue;
            }
            let mut fresh = true;
            for r in &reps {
                if find_isomorphism(r, &g)?.is_some() {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                reps.push(g);
            }
        }
    }
    if reps.len() != 3 {
        return Err(Error::VariantCount { n, found: reps.len() });
    }
    Ok(reps)
}

/// Alternates colors 1, 2 along a Hamilton path; every other edge gets 1.
pub fn color_traceable(g: &Graph) -> Result<EdgeColoring> {
    g.require_connected()?;
    let path = hamilton_path(g)?.ok_or(Error::NotTraceable)?;
    let mut colors = vec![1; g.m()];
    for (i, w) in path.windows(2).enumerate() {
        let e = g.edge_between(w[0], w[1]).expect("consecutive path vertices are adjacent");
        colors[e] = 1 + i % 2;
    }
    EdgeColoring::new(colors, 2)
}

/// Properly colors the spanning tree `tree_edges` with Δ(T) colors. Each
/// remaining edge takes the smallest color absent from the tree edges at both
/// its endpoints, or 1 if the palette has none.
pub fn color_via_spanning_tree(g: &Graph, tree_edges: &[EdgeId]) -> Result<EdgeColoring> {
    let mut colors = color_spanning_tree(g, tree_edges)?;
    let mut deg = vec![0usize; g.n()];
    let mut at = vec![0u64; g.n()];
    for &e in tree_edges {
        let (u, v) = g.edge(e);
        deg[u] += 1;
        deg[v] += 1;
        at[u] |= 1 << (colors[e] - 1);
        at[v] |= 1 << (colors[e] - 1);
    }
    let palette = deg.iter().copied().max().unwrap_or(0);
    for (e, c) in colors.iter_mut().enumerate() {
        if *c == 0 {
            let (u, v) = g.edge(e);
            let busy = at[u] | at[v];
            *c = (1..=palette).find(|&c| busy >> (c - 1) & 1 == 0).unwrap_or(1);
        }
    }
    EdgeColoring::new(colors, palette)
}

/// Position of a unicyclic graph in the case split of its index formula,
/// tested in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnicyclicCase {
    /// The graph is its own cycle; index 2.
    Cycle,
    /// Some maximum-degree vertex lies off the cycle; index Δ.
    OffCycleMax,
    /// At most two maximum-degree vertices, all on the cycle and adjacent
    /// if there are two; index Δ-1.
    AdjacentPair,
    /// Anything else; index Δ.
    Otherwise,
}

pub fn unicyclic_case(g: &Graph) -> Result<UnicyclicCase> {
    let cycle = g.cycle_edges()?;
    if cycle.len() == g.m() {
        return Ok(UnicyclicCase::Cycle);
    }
    let delta = g.max_degree();
    let mut on_cycle = vec![false; g.n()];
    for &e in &cycle {
        let (u, v) = g.edge(e);
        on_cycle[u] = true;
        on_cycle[v] = true;
    }
    let top: Vec<VertexId> = (0..g.n()).filter(|&v| g.degree(v) == delta).collect();
    Ok(if top.iter().any(|&v| !on_cycle[v]) {
        UnicyclicCase::OffCycleMax
    } else if top.len() == 1 || (top.len() == 2 && g.has_edge(top[0], top[1])) {
        UnicyclicCase::AdjacentPair
    } else {
        UnicyclicCase::Otherwise
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnicyclicColoring {
    pub coloring: EdgeColoring,
    /// The index the case split predicts; the coloring uses this many colors.
    pub value: usize,
    pub case: UnicyclicCase,
    /// The cycle edge left out of the spanning tree, if any.
    pub deleted: Option<EdgeId>,
}

/// Colors a unicyclic graph with the number of colors its case predicts.
///
/// A cycle is colored along a Hamilton path. Otherwise one cycle edge is
/// dropped and the resulting spanning tree colored with its maximum degree:
/// in the adjacent-pair case the dropped edge touches a maximum-degree vertex
/// (the edge joining the pair, if there are two); in the other cases any cycle
/// edge leaves Δ, and the smallest id is taken.
pub fn color_unicyclic(g: &Graph) -> Result<UnicyclicColoring> {
    let case = unicyclic_case(g)?;
    if case == UnicyclicCase::Cycle {
        return Ok(UnicyclicColoring { coloring: color_traceable(g)?, value: 2, case, deleted: None });
    }
    let delta = g.max_degree();
    let cycle = g.cycle_edges()?;
    let tree_delta = |drop: EdgeId| {
        let (a, b) = g.edge(drop);
        (0..g.n()).map(|v| g.degree(v) - usize::from(v == a || v == b)).max().unwrap_or(0)
    };
    let drop = *cycle.iter().min_by_key(|&&e| (tree_delta(e), e)).expect("a unicyclic graph has a cycle");
    let tree: Vec<EdgeId> = (0..g.m()).filter(|&e| e != drop).collect();
    let coloring = color_via_spanning_tree(g, &tree)?;
    let value = if case == UnicyclicCase::AdjacentPair { delta - 1 } else { delta };
    debug_assert_eq!(tree_delta(drop), value);
    Ok(UnicyclicColoring { coloring, value, case, deleted: Some(drop) })
}

/// Colors a star with two added edges with n-3 colors (for n >= 5).
///
/// Two hub edges are dropped so that the rest is a spanning tree of maximum
/// degree n-3: with disjoint added edges `{v1, v2}` and `{v3, v4}`, the hub
/// edges to v1 and v3; with added edges `{v1, v2}` and `{v2, v3}`, the hub
/// edges to the shared vertex v2 and to v3.
pub fn color_snpp(g: &Graph) -> Result<EdgeColoring> {
    let n = g.n();
    if n < 5 || g.m() != n + 1 {
        return Err(Error::NotStarPlusPlus);
    }
    for variant in [SnppVariant::Disjoint, SnppVariant::Sharing] {
        let model = build(&FamilySpec::StarPlusPlus { n, variant })?;
        let Some(map) = find_isomorphism(&model, g)? else { continue };
        let dropped = match variant {
            SnppVariant::Disjoint => [(0, 1), (0, 3)],
            SnppVariant::Sharing => [(0, 2), (0, 3)],
        };
        let dropped: Vec<EdgeId> = dropped
            .iter()
            .map(|&(a, b)| g.edge_between(map[a], map[b]).expect("isomorphism preserves edges"))
            .collect();
        let tree: Vec<EdgeId> = (0..g.m()).filter(|e| !dropped.contains(e)).collect();
        return color_via_spanning_tree(g, &tree);
    }
    Err(Error::NotStarPlusPlus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_k_proper;
    use crate::graph::{are_isomorphic, bridge_stats};

    fn verifies(g: &Graph, c: &EdgeColoring, ks: std::ops::RangeInclusive<usize>) -> bool {
        ks.into_iter().all(|k| verify_k_proper(g, c, k).unwrap().is_valid())
    }

    #[test]
    fn star_plus_five() {
        let g = build(&FamilySpec::StarPlus { n: 5 }).unwrap();
        assert_eq!(g.m(), 5);
        assert_eq!(g.max_degree(), 4);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn broom_six_is_the_tree_with_delta_n_minus_2() {
        let g = build(&FamilySpec::Broom { n: 6 }).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.max_degree(), 4);
        let b = bridge_stats(&g).unwrap();
        assert_eq!((b.bridges.len(), b.max), (5, 4));
        let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/trees6.g6")).unwrap();
        let matches = crate::graph::read_graph6_lines(&text)
            .into_iter()
            .map(|(_, t)| t.unwrap())
            .filter(|t| t.max_degree() == 4)
            .collect::<Vec<_>>();
        assert_eq!(matches.len(), 1);
        assert!(are_isomorphic(&matches[0], &g).unwrap());
    }

    #[test]
    fn independence_tree_shape() {
        for b in 2..=8 {
            for a in 2..=b {
                let g = build(&FamilySpec::IndependenceTree { a, b }).unwrap();
                assert!(g.is_tree());
                assert_eq!((g.n(), g.max_degree()), (b + 1, a), "a={a} b={b}");
            }
        }
        let g = build(&FamilySpec::IndependenceTree { a: 3, b: 5 }).unwrap();
        assert_eq!((g.n(), g.max_degree()), (6, 3));
    }

    #[test]
    fn invalid_parameters_are_named() {
        let err = build(&FamilySpec::IndependenceTree { a: 4, b: 3 }).unwrap_err();
        assert_eq!(err, Error::InvalidFamily("independence-tree: requires 2 <= a <= b".into()));
        assert!(build(&FamilySpec::Broom { n: 4 }).is_err());
        assert!(build(&FamilySpec::Wheel { n: 3 }).is_err());
        assert!(build(&FamilySpec::UnicyclicBroomVariant { n: 6, index: 4 }).is_err());
    }

    #[test]
    fn named_families_shapes() {
        let w = build(&FamilySpec::Wheel { n: 5 }).unwrap();
        assert_eq!((w.m(), w.degree(0)), (8, 4));
        assert!((1..5).all(|v| w.degree(v) == 3));
        assert_eq!(build(&FamilySpec::Complete { n: 5 }).unwrap().m(), 10);
        let c = build(&FamilySpec::Cycle { n: 5 }).unwrap();
        assert!((0..5).all(|v| c.degree(v) == 2));
    }

    #[test]
    fn broom_variants_for_small_n() {
        for n in 5..=8 {
            let vs = unicyclic_broom_variants(n).unwrap();
            assert_eq!(vs.len(), 3);
            for g in &vs {
                assert!(g.is_unicyclic());
                assert_eq!(g.max_degree(), n - 2);
                assert_eq!(color_unicyclic(g).unwrap().value, n - 3);
            }
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                assert!(!are_isomorphic(&vs[a], &vs[b]).unwrap());
            }
        }
        // At n = 6: broom plus v1-leaf, leaf-leaf, pendant-leaf.
        let vs = unicyclic_broom_variants(6).unwrap();
        assert_eq!(vs[0].edge(5), (1, 2));
        assert_eq!(vs[1].edge(5), (2, 3));
        assert_eq!(vs[2].edge(5), (2, 5));
    }

    #[test]
    fn traceable_colorings() {
        let p6 = build(&FamilySpec::Path { n: 6 }).unwrap();
        assert_eq!(color_traceable(&p6).unwrap().colors(), &[1, 2, 1, 2, 1]);
        let k4 = build(&FamilySpec::Complete { n: 4 }).unwrap();
        assert!(verifies(&k4, &color_traceable(&k4).unwrap(), 3..=4));
        let w5 = build(&FamilySpec::Wheel { n: 5 }).unwrap();
        assert!(verifies(&w5, &color_traceable(&w5).unwrap(), 3..=5));
        let s4 = build(&FamilySpec::Star { n: 4 }).unwrap();
        assert_eq!(color_traceable(&s4), Err(Error::NotTraceable));
    }

    #[test]
    fn unicyclic_cases() {
        let s5p = build(&FamilySpec::StarPlus { n: 5 }).unwrap();
        let r = color_unicyclic(&s5p).unwrap();
        assert_eq!((r.case, r.value), (UnicyclicCase::AdjacentPair, 3));
        assert_eq!(r.coloring.used_colors(), 3);
        assert!(verifies(&s5p, &r.coloring, 3..=5));

        // C_5 with a pendant vertex.
        let mut e: Vec<_> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
        e.push((0, 5));
        let g = Graph::from_edges(6, e).unwrap();
        let r = color_unicyclic(&g).unwrap();
        assert_eq!((r.case, r.value), (UnicyclicCase::AdjacentPair, 2));
        assert!(verifies(&g, &r.coloring, 3..=6));

        // C_4 with pendants at opposite corners.
        let mut e: Vec<_> = (0..4).map(|v| (v, (v + 1) % 4)).collect();
        e.extend([(0, 4), (2, 5)]);
        let g = Graph::from_edges(6, e).unwrap();
        let r = color_unicyclic(&g).unwrap();
        assert_eq!((r.case, r.value), (UnicyclicCase::Otherwise, 3));
        assert!(verifies(&g, &r.coloring, 3..=6));

        // A degree-3 vertex hanging off a triangle.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(unicyclic_case(&g).unwrap(), UnicyclicCase::OffCycleMax);

        let c5 = build(&FamilySpec::Cycle { n: 5 }).unwrap();
        assert_eq!(color_unicyclic(&c5).unwrap().case, UnicyclicCase::Cycle);
        assert_eq!(color_unicyclic(&build(&FamilySpec::Path { n: 4 }).unwrap()), Err(Error::NotUnicyclic));
    }

    #[test]
    fn snpp_colorings() {
        for n in 5..=7 {
            for variant in [SnppVariant::Disjoint, SnppVariant::Sharing] {
                let g = build(&FamilySpec::StarPlusPlus { n, variant }).unwrap();
                let c = color_snpp(&g).unwrap();
                assert_eq!((c.palette(), c.used_colors()), (n - 3, n - 3), "{variant} n={n}");
                assert!(verifies(&g, &c, 3..=n), "{variant} n={n}");
                // relabeled inputs are recognized too
                let perm: Vec<usize> = (0..n).rev().collect();
                let h = g.relabel(&perm).unwrap();
                assert!(verifies(&h, &color_snpp(&h).unwrap(), 3..=3));
            }
        }
        let s6p = build(&FamilySpec::StarPlus { n: 6 }).unwrap();
        assert_eq!(color_snpp(&s6p), Err(Error::NotStarPlusPlus));
    }
}
