// SPDX-License-Identifier: Apache-2.0

//! Spanning-tree enumeration by contraction/deletion.
//!
//! Edges are decided in id order. Taking an edge contracts its endpoints
//! (union-find with rollback); skipping it deletes it, which is only allowed
//! while the undecided edges can still connect the graph. Every spanning tree
//! is produced exactly once.

use std::ops::ControlFlow;

use super::{EdgeId, Graph};
use crate::error::Result;

pub const DEFAULT_SPANNING_TREE_CAP: usize = 1_000_000;

/// How an enumeration ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeWalk {
    /// Every spanning tree was visited.
    Completed { visited: usize },
    /// `cap` trees were visited and at least one more exists.
    Capped { visited: usize },
    /// The callback asked to stop.
    Stopped { visited: usize },
}

impl TreeWalk {
    pub fn visited(&self) -> usize {
        match *self {
            TreeWalk::Completed { visited } | TreeWalk::Capped { visited } | TreeWalk::Stopped { visited } => visited,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTrees {
    /// Edge ids of each tree, ascending.
    pub trees: Vec<Vec<EdgeId>>,
    /// False when the cap cut the enumeration short.
    pub complete: bool,
}

struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<(usize, usize)>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu { parent: (0..n).collect(), size: vec![1; n], history: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push((a, b));
        true
    }

    fn rollback(&mut self) {
        let (a, b) = self.history.pop().expect("rollback without union");
        self.parent[b] = b;
        self.size[a] -= self.size[b];
    }
}

struct Walker<'g, F> {
    g: &'g Graph,
    cap: usize,
    visit: F,
    dsu: RollbackDsu,
    chosen: Vec<EdgeId>,
    visited: usize,
}

enum Halt {
    Cap,
    Stop,
}

impl<F: FnMut(&[EdgeId]) -> ControlFlow<()>> Walker<'_, F> {
    /// Can the chosen edges plus edges `from..` still span the graph?
    fn completable(&self, from: usize) -> bool {
        let mut dsu = RollbackDsu::new(self.g.n());
        let mut parts = self.g.n();
        for &e in self.chosen.iter() {
            let (u, v) = self.g.edge(e);
            if dsu.union(u, v) {
                parts -= 1;
            }
        }
        for e in from..self.g.m() {
            let (u, v) = self.g.edge(e);
            if dsu.union(u, v) {
                parts -= 1;
                if parts == 1 {
                    return true;
                }
            }
        }
        parts == 1
    }

    fn rec(&mut self, idx: usize) -> Result<(), Halt> {
        if self.chosen.len() + 1 == self.g.n() {
            if self.visited == self.cap {
                return Err(Halt::Cap);
            }
            self.visited += 1;
            return match (self.visit)(&self.chosen) {
                ControlFlow::Continue(()) => Ok(()),
                ControlFlow::Break(()) => Err(Halt::Stop),
            };
        }
        if idx == self.g.m() {
            return Ok(());
        }
        let (u, v) = self.g.edge(idx);
        if self.dsu.union(u, v) {
            self.chosen.push(idx);
            let r = self.rec(idx + 1);
            self.chosen.pop();
            self.dsu.rollback();
            r?;
        }
        if self.completable(idx + 1) {
            self.rec(idx + 1)?;
        }
        Ok(())
    }
}

/// Streams spanning trees of `g` to `visit`, at most `cap` of them.
pub fn for_each_spanning_tree<F>(g: &Graph, cap: usize, visit: F) -> Result<TreeWalk>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    g.require_connected()?;
    let mut w = Walker { g, cap, visit, dsu: RollbackDsu::new(g.n()), chosen: Vec::with_capacity(g.n()), visited: 0 };
    Ok(match w.rec(0) {
        Ok(()) => TreeWalk::Completed { visited: w.visited },
        Err(Halt::Cap) => TreeWalk::Capped { visited: w.visited },
        Err(Halt::Stop) => TreeWalk::Stopped { visited: w.visited },
    })
}

/// Collects up to `cap` spanning trees.
pub fn spanning_trees(g: &Graph, cap: usize) -> Result<SpanningTrees> {
    let mut trees = Vec::new();
    let walk = for_each_spanning_tree(g, cap, |t| {
        trees.push(t.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(SpanningTrees { trees, complete: matches!(walk, TreeWalk::Completed { .. }) })
}
