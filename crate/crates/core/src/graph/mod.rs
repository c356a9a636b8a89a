//! Finite simple graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Vertices are the dense indices `0..n`; each vertex owns a `u128` neighbor
//! bitset. Graphs are plain values: every operation that changes the vertex
//! set returns a [`Relabeled`] graph that remembers where each new vertex came
//! from.

mod build;
mod canon;
mod enumerate;
mod friendship;
pub mod io;

pub use build::{complete, complete_bipartite, cycle, empty, friendship, path, star, turan};
pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use enumerate::{
    enumerate_graphs, for_each_graph, Constraints, Enumeration, ForbiddenPattern,
};
pub use friendship::{contains_friendship, FriendshipEmbedding};

use crate::bits::{bit, contains, low_mask, Bits, VertexSet};
use crate::error::{invalid, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest supported vertex count (width of the neighbor bitsets).
pub const MAX_VERTICES: usize = 128;

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the edge `{a, b}`; panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loops are not edges");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// A graph produced from another one by deleting or selecting vertices.
///
/// `original[i]` is the vertex of the source graph that became vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. Panics if `n > MAX_VERTICES`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices are supported");
        Graph { adj: vec![0; n] }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges are merged.
    pub fn from_edges<E: EdgeLike>(n: usize, edges: &[E]) -> Result<Self> {
        if n > MAX_VERTICES {
            return invalid(format!("{n} vertices exceeds the supported maximum {MAX_VERTICES}"));
        }
        let mut g = Graph::empty(n);
        for e in edges {
            let (a, b) = e.endpoints();
            if a == b {
                return invalid(format!("loop at vertex {a}"));
            }
            if a >= n || b >= n {
                return invalid(format!("edge ({a},{b}) outside 0..{n}"));
            }
            g.insert_edge(a, b);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertex_mask(&self) -> VertexSet {
        low_mask(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        contains(self.adj[u], v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Vertices of positive degree.
    pub fn non_isolated(&self) -> VertexSet {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, a)| **a != 0)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }

    /// Inserts `uv`; panics on out-of-range vertices or a loop.
    pub fn insert_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n() && v < self.n(), "bad edge ({u},{v})");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn delete_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n() && v < self.n(), "bad edge ({u},{v})");
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    fn check_vertices(&self, vs: impl IntoIterator<Item = usize>) -> Result<()> {
        for v in vs {
            if v >= self.n() {
                return invalid(format!("vertex {v} outside 0..{}", self.n()));
            }
        }
        Ok(())
    }

    fn check_edges(&self, edges: &[Edge]) -> Result<()> {
        for e in edges {
            self.check_vertices([e.u, e.v])?;
        }
        Ok(())
    }

    /// Subgraph induced by the vertex set `keep`, vertices renumbered in increasing order.
    pub fn induced_mask(&self, keep: VertexSet) -> Relabeled {
        let keep = keep & self.vertex_mask();
        let original: Vec<usize> = Bits(keep).collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in original.iter().enumerate() {
            pos[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| Bits(self.adj[v] & keep).fold(0, |acc, w| acc | bit(pos[w])))
            .collect();
        Relabeled { graph: Graph { adj }, original }
    }

    /// `G[X]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Relabeled> {
        self.check_vertices(vertices.iter().copied())?;
        Ok(self.induced_mask(crate::bits::set_of(vertices)))
    }

    /// `G - X`.
    pub fn remove_vertices(&self, vertices: &[usize]) -> Result<Relabeled> {
        self.check_vertices(vertices.iter().copied())?;
        Ok(self.induced_mask(self.vertex_mask() & !crate::bits::set_of(vertices)))
    }

    /// `G - Y`; edges of `Y` that are absent are ignored.
    pub fn remove_edges(&self, edges: &[Edge]) -> Result<Graph> {
        self.check_edges(edges)?;
        let mut g = self.clone();
        for e in edges {
            g.delete_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// `G + Y` over the existing vertex set.
    pub fn add_edges(&self, edges: &[Edge]) -> Result<Graph> {
        self.check_edges(edges)?;
        let mut g = self.clone();
        for e in edges {
            g.insert_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// The graph with isolated vertices deleted.
    pub fn strip_isolated(&self) -> Relabeled {
        self.induced_mask(self.non_isolated())
    }

    /// Pads the graph with isolated vertices up to `n` vertices.
    pub fn padded(&self, n: usize) -> Graph {
        assert!(n >= self.n() && n <= MAX_VERTICES);
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        Graph { adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        assert!(shift + other.n() <= MAX_VERTICES, "union exceeds {MAX_VERTICES} vertices");
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a << shift));
        Graph { adj }
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.union(other);
        let left = self.vertex_mask();
        let right = g.vertex_mask() & !left;
        for v in 0..g.n() {
            g.adj[v] |= if v < self.n() { right } else { left };
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n()).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { adj }
    }

    /// Connected components of `G[within]`, each as a vertex set, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertex_mask();
        let mut comps = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                next &= within & !comp;
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_mask())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of odd-order components of `G - T`.
    pub fn odd_components(&self, removed: &[usize]) -> Result<usize> {
        self.check_vertices(removed.iter().copied())?;
        Ok(self.odd_components_mask(crate::bits::set_of(removed)))
    }

    pub(crate) fn odd_components_mask(&self, removed: VertexSet) -> usize {
        self.components_within(self.vertex_mask() & !removed)
            .into_iter()
            .filter(|c| c.count_ones() % 2 == 1)
            .count()
    }

    /// A proper 2-coloring of `G[within]` as the vertex set of one color class,
    /// or `None` when that subgraph has an odd cycle. The least vertex of each
    /// component is put on the returned side.
    pub fn bipartition_within(&self, within: VertexSet) -> Option<VertexSet> {
        let mut side = 0;
        for comp in self.components_within(within) {
            let start = comp.trailing_zeros() as usize;
            let mut color_a = bit(start);
            let mut color_b = 0;
            let mut frontier = color_a;
            let mut on_a = true;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v] & within;
                }
                let (same, other) = if on_a { (color_a, &mut color_b) } else { (color_b, &mut color_a) };
                if next & same != 0 {
                    return None;
                }
                next &= !*other;
                *other |= next;
                frontier = next;
                on_a = !on_a;
            }
            if color_a & color_b != 0 {
                return None;
            }
            side |= color_a;
        }
        Some(side)
    }

    /// True when every vertex has degree `d`.
    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n()).all(|v| self.degree(v) == d)
    }

    /// True when all vertices have degree `d` except exactly one of degree `d - 1`.
    pub fn is_nearly_regular(&self, d: usize) -> bool {
        if d == 0 {
            return false;
        }
        let mut low = 0;
        for v in 0..self.n() {
            match self.degree(v) {
                x if x == d => {}
                x if x + 1 == d => low += 1,
                _ => return false,
            }
        }
        low == 1
    }

    /// Applies the vertex map `perm` (vertex `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph::empty(self.n());
        for e in self.edges() {
            g.insert_edge(perm[e.u], perm[e.v]);
        }
        g
    }
}

/// Anything that names two endpoints.
pub trait EdgeLike {
    fn endpoints(&self) -> (usize, usize);
}

impl EdgeLike for Edge {
    fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl EdgeLike for (usize, usize) {
    fn endpoints(&self) -> (usize, usize) {
        *self
    }
}

impl EdgeLike for [usize; 2] {
    fn endpoints(&self) -> (usize, usize) {
        (self[0], self[1])
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}
