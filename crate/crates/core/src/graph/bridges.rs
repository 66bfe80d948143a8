// SPDX-License-Identifier: Apache-2.0

use super::{EdgeId, Graph};
use crate::error::Result;

/// Cut edges of a connected graph and how many of them meet each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeStats {
    /// Bridge edge ids, ascending.
    pub bridges: Vec<EdgeId>,
    /// `per_vertex[v]` is the number of bridges incident with `v`.
    pub per_vertex: Vec<usize>,
    /// Maximum of `per_vertex`.
    pub max: usize,
}

/// Finds the bridges of `g` with the DFS low-point method.
pub fn bridge_stats(g: &Graph) -> Result<BridgeStats> {
    g.require_connected()?;
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut bridges = Vec::new();

    fn dfs(
        g: &Graph,
        u: usize,
        parent_edge: Option<EdgeId>,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        bridges: &mut Vec<EdgeId>,
    ) {
        disc[u] = *time;
        low[u] = *time;
        *time += 1;
        for &(v, e) in g.neighbors(u) {
            if Some(e) == parent_edge {
                continue;
            }
            if disc[v] == usize::MAX {
                dfs(g, v, Some(e), disc, low, time, bridges);
                low[u] = low[u].min(low[v]);
                if low[v] > disc[u] {
                    bridges.push(e);
                }
            } else {
                low[u] = low[u].min(disc[v]);
            }
        }
    }

    dfs(g, 0, None, &mut disc, &mut low, &mut time, &mut bridges);
    bridges.sort_unstable();

    let mut per_vertex = vec![0; n];
    for &e in &bridges {
        let (u, v) = g.edge(e);
        per_vertex[u] += 1;
        per_vertex[v] += 1;
    }
    let max = per_vertex.iter().copied().max().unwrap_or(0);
    Ok(BridgeStats { bridges, per_vertex, max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::read_graph6_lines;

    /// Deletes each edge in turn and counts components.
    fn brute_force_bridges(g: &Graph) -> Vec<EdgeId> {
        let base = g.component_count_with(&vec![true; g.m()]);
        (0..g.m())
            .filter(|&e| {
                let mut keep = vec![true; g.m()];
                keep[e] = false;
                g.component_count_with(&keep) > base
            })
            .collect()
    }

    #[test]
    fn star_has_only_bridges() {
        let s5 = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let st = bridge_stats(&s5).unwrap();
        assert_eq!(st.bridges, vec![0, 1, 2, 3]);
        assert_eq!(st.max, 4);
        assert_eq!(st.per_vertex[0], 4);
    }

    #[test]
    fn cycle_has_none() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let st = bridge_stats(&c4).unwrap();
        assert!(st.bridges.is_empty());
        assert_eq!(st.max, 0);
    }

    #[test]
    fn broom_on_six_vertices() {
        let broom = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5)]).unwrap();
        let st = bridge_stats(&broom).unwrap();
        assert_eq!(st.bridges, brute_force_bridges(&broom));
        assert_eq!(st.bridges.len(), 5);
        assert_eq!(st.max, 4);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(bridge_stats(&g), Err(Error::Disconnected));
    }

    #[test]
    fn agrees_with_brute_force_up_to_seven_vertices() {
        for n in 3..=7 {
            let text =
                std::fs::read_to_string(format!("{}/tests/fixtures/connected{n}.g6", env!("CARGO_MANIFEST_DIR")))
                    .unwrap();
            for (_, g) in read_graph6_lines(&text) {
                let g = g.unwrap();
                let st = bridge_stats(&g).unwrap();
                assert_eq!(st.bridges, brute_force_bridges(&g));
                assert_eq!(st.max, *st.per_vertex.iter().max().unwrap());
            }
        }
    }
}
