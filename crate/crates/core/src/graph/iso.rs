// SPDX-License-Identifier: Apache-2.0

use super::{Graph, VertexId};
use crate::error::{Error, Result};

pub const ISO_MAX_N: usize = 10;

/// Finds a bijection `map` with `uv` an edge of `a` iff `map[u] map[v]` is
/// an edge of `b`.
///
/// Vertices of `a` are matched in order of decreasing degree; candidates in
/// `b` must have equal degree and agree on adjacency to every vertex already
/// mapped.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<VertexId>>> {
    for g in [a, b] {
        if g.n() > ISO_MAX_N {
            return Err(Error::SizeCap { what: "isomorphism test", limit: ISO_MAX_N, n: g.n() });
        }
    }
    if a.n() != b.n() || a.m() != b.m() || a.degree_stats().sequence != b.degree_stats().sequence {
        return Ok(None);
    }
    let n = a.n();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));

    fn rec(a: &Graph, b: &Graph, order: &[VertexId], depth: usize, map: &mut [usize], used: &mut u64) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        for cand in 0..b.n() {
            if *used >> cand & 1 == 1 || b.degree(cand) != a.degree(u) {
                continue;
            }
            let consistent = order[..depth].iter().all(|&w| a.has_edge(u, w) == b.has_edge(cand, map[w]));
            if !consistent {
                continue;
            }
            map[u] = cand;
            *used |= 1 << cand;
            if rec(a, b, order, depth + 1, map, used) {
                return true;
            }
            *used &= !(1 << cand);
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    Ok(rec(a, b, &order, 0, &mut map, &mut used).then_some(map))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}
