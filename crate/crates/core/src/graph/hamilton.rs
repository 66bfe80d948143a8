// SPDX-License-Identifier: Apache-2.0

use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Bitmask dynamic program size limit.
pub const HAMILTON_MAX_N: usize = 20;

/// Returns a Hamilton path (vertex order) if one exists.
///
/// `ends[mask]` holds the set of vertices at which some path visiting exactly
/// `mask` can end; the witness is rebuilt backwards from the full mask.
pub fn hamilton_path(g: &Graph) -> Result<Option<Vec<VertexId>>> {
    let n = g.n();
    if n > HAMILTON_MAX_N {
        return Err(Error::SizeCap { what: "Hamilton path search", limit: HAMILTON_MAX_N, n });
    }
    if n == 0 {
        return Ok(None);
    }
    let full = (1usize << n) - 1;
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbor_mask(v) as u32).collect();
    let mut ends = vec![0u32; full + 1];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let mut e = ends[mask];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut ext = nbr[v] & !(mask as u32);
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    if ends[full] == 0 {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(n);
    let mut mask = full;
    let mut v = ends[full].trailing_zeros() as usize;
    loop {
        path.push(v);
        let rest = mask & !(1 << v);
        if rest == 0 {
            break;
        }
        let prev = ends[rest] & nbr[v];
        debug_assert!(prev != 0);
        mask = rest;
        v = prev.trailing_zeros() as usize;
    }
    path.reverse();
    Ok(Some(path))
}

pub fn hamilton_path_exists(g: &Graph) -> Result<bool> {
    Ok(hamilton_path(g)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_spanning_path(g: &Graph, p: &[usize]) -> bool {
        let mut seen = vec![false; g.n()];
        p.len() == g.n()
            && p.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
            && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    #[test]
    fn path_graph_is_its_own_witness() {
        let p6 = Graph::from_edges(6, (0..5).map(|i| (i, i + 1))).unwrap();
        let w = hamilton_path(&p6).unwrap().unwrap();
        assert!(is_spanning_path(&p6, &w));
    }

    #[test]
    fn star_with_three_leaves_is_not_traceable() {
        let s4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!hamilton_path_exists(&s4).unwrap());
    }

    #[test]
    fn wheel_is_traceable() {
        let mut edges: Vec<_> = (1..5).map(|i| (0, i)).collect();
        edges.extend((1..5).map(|i| (i, i % 4 + 1)));
        let w5 = Graph::from_edges(5, edges).unwrap();
        let w = hamilton_path(&w5).unwrap().unwrap();
        assert!(is_spanning_path(&w5, &w));
    }

    #[test]
    fn size_cap() {
        let g = Graph::empty(21).unwrap();
        assert!(matches!(hamilton_path(&g), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn single_vertex() {
        assert_eq!(hamilton_path(&Graph::empty(1).unwrap()).unwrap(), Some(vec![0]));
    }
}
