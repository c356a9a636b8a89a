//! Edmonds' blossom algorithm (BFS with blossom contraction via base labels).

use crate::bits::{bit, Bits, VertexSet};
use crate::graph::Graph;
use std::collections::VecDeque;

pub(super) const NONE: usize = usize::MAX;

/// Mates of a maximum matching of `G[within]`; `NONE` for unmatched vertices
/// and for vertices outside `within`.
pub(super) fn mates_within(g: &Graph, within: VertexSet) -> Vec<usize> {
    let n = g.n();
    let mut state = State {
        adj: (0..n).map(|v| if (within >> v) & 1 == 1 { g.neighbors(v) & within } else { 0 }).collect(),
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::with_capacity(n),
    };
    // greedy start
    for v in Bits(within) {
        if state.mate[v] == NONE {
            if let Some(w) = Bits(state.adj[v]).find(|&w| state.mate[w] == NONE) {
                state.mate[v] = w;
                state.mate[w] = v;
            }
        }
    }
    for root in Bits(within) {
        if state.mate[root] == NONE && state.adj[root] != 0 {
            if let Some(end) = state.find_augmenting_path(root) {
                state.augment(end);
            }
        }
    }
    state.mate
}

struct State {
    adj: Vec<VertexSet>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl State {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen: VertexSet = 0;
        loop {
            a = self.base[a];
            seen |= bit(a);
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if (seen >> b) & 1 == 1 {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in Bits(self.adj[v]) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}
