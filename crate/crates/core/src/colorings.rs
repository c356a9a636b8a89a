//! Edge-colorings of `K_n` and the lower-bound constructions.
//!
//! Colors are always normalized to `1..=r` in order of first appearance along
//! the lexicographic edge order, so two colorings with the same color classes
//! are equal as values. Rainbow supports sit on the lowest-indexed vertices.

use crate::catalog::{build_d_member, build_ex_friendship};
use crate::error::{invalid, Error, Result};
use crate::graph::{complete, Edge, Graph};
use serde::{Deserialize, Serialize};

pub type Color = u32;

/// A total coloring of `E(K_n)` using exactly the colors `1..=r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    r: usize,
    matrix: Vec<Color>,
}

/// Index of `{u, v}` in the lexicographic order of `E(K_n)`.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Edges of `K_n` in lexicographic order.
pub fn complete_edges(n: usize) -> impl Iterator<Item = Edge> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| Edge { u, v }))
}

impl EdgeColoring {
    /// Colors `K_n` with `color(u, v)` (called with `u < v`) and normalizes.
    pub fn from_fn(n: usize, mut color: impl FnMut(usize, usize) -> u64) -> Self {
        let raw: Vec<u64> = complete_edges(n).map(|e| color(e.u, e.v)).collect();
        Self::from_raw(n, &raw)
    }

    /// Builds a coloring from one color per edge in lexicographic order.
    pub fn from_edge_colors(n: usize, colors: &[u64]) -> Result<Self> {
        if colors.len() != n * n.saturating_sub(1) / 2 {
            return invalid(format!("K_{n} has {} edges, got {} colors", n * n.saturating_sub(1) / 2, colors.len()));
        }
        Ok(Self::from_raw(n, colors))
    }

    fn from_raw(n: usize, raw: &[u64]) -> Self {
        let mut names = std::collections::HashMap::new();
        let mut matrix = vec![0; n * n];
        for (e, c) in complete_edges(n).zip(raw) {
            let next = names.len() as Color + 1;
            let c = *names.entry(*c).or_insert(next);
            matrix[e.u * n + e.v] = c;
            matrix[e.v * n + e.u] = c;
        }
        EdgeColoring { n, r: names.len(), matrix }
    }

    /// Every edge its own color.
    pub fn rainbow(n: usize) -> Self {
        let mut next = 0;
        Self::from_fn(n, |_, _| {
            next += 1;
            next
        })
    }

    /// One color on every edge.
    pub fn monochromatic(n: usize) -> Self {
        Self::from_fn(n, |_, _| 1)
    }

    /// Each edge of `support` (on the lowest vertices) gets its own color and
    /// every other edge of `K_n` shares one filler color.
    pub fn rainbow_support(n: usize, support: &Graph) -> Result<Self> {
        if support.n() > n {
            return invalid(format!("support has {} vertices, K_n has {n}", support.n()));
        }
        let mut next = 1;
        let mut ids = vec![0u64; n * n];
        for e in support.edges() {
            ids[e.u * n + e.v] = next;
            next += 1;
        }
        Ok(Self::from_fn(n, |u, v| ids[u * n + v]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of colors used.
    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.matrix[u * self.n + v]
    }

    /// Colors in lexicographic edge order.
    pub fn edge_colors(&self) -> Vec<Color> {
        complete_edges(self.n).map(|e| self.color(e.u, e.v)).collect()
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut inverse = vec![0; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inverse[p] = v;
        }
        Self::from_fn(self.n, |u, v| self.color(inverse[u], inverse[v]) as u64)
    }

    /// Splits the class of `color`: the listed edges of that class get a new color.
    pub fn split_class(&self, color: Color, moved: &[Edge]) -> Result<Self> {
        let fresh = self.r as u64 + 1;
        for e in moved {
            if e.v >= self.n || self.color(e.u, e.v) != color {
                return invalid(format!("edge ({}, {}) is not in class {color}", e.u, e.v));
            }
        }
        Ok(Self::from_fn(self.n, |u, v| {
            if moved.contains(&Edge { u, v }) {
                fresh
            } else {
                self.color(u, v) as u64
            }
        }))
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EdgeColoring(n={}, r={}, {:?})", self.n, self.r, self.edge_colors())
    }
}

/// Renames colors to `1..=r` by first appearance.
pub fn normalize(c: &EdgeColoring) -> EdgeColoring {
    EdgeColoring::from_fn(c.n, |u, v| c.color(u, v) as u64)
}

/// Color classes; entry `i` holds the edges of color `i + 1` in lexicographic order.
pub fn color_classes(c: &EdgeColoring) -> Vec<Vec<Edge>> {
    let mut classes = vec![Vec::new(); c.r];
    for e in complete_edges(c.n) {
        classes[c.color(e.u, e.v) as usize - 1].push(e);
    }
    classes
}

pub fn colors_used(c: &EdgeColoring) -> usize {
    c.r
}

/// Which edge stands in for a color class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    LexSmallest,
    LexLargest,
}

/// A rainbow subgraph with one edge from every color class.
pub fn representative_rainbow_subgraph(c: &EdgeColoring, pick: TieBreak) -> Graph {
    let mut g = Graph::empty(c.n);
    for class in color_classes(c) {
        let e = match pick {
            TieBreak::LexSmallest => class.first(),
            TieBreak::LexLargest => class.last(),
        }
        .expect("normalized classes are nonempty");
        g.insert_edge(e.u, e.v);
    }
    g
}

/// The 3-coloring with no rainbow `K_{1,3}` or `3K_2`: edge `01` gets color 1,
/// the other edges at `0` color 2, everything else color 3.
pub fn coloring_k2_star(n: usize) -> Result<EdgeColoring> {
    if n < 4 {
        return invalid(format!("coloring_k2_star needs n >= 4, got {n}"));
    }
    Ok(EdgeColoring::from_fn(n, |u, v| match (u, v) {
        (0, 1) => 1,
        (0, _) => 2,
        _ => 3,
    }))
}

/// `K_k ∪ K_k` rainbow, filler elsewhere: `k² - k + 1` colors.
pub fn coloring_two_cliques(n: usize, k: usize) -> Result<EdgeColoring> {
    if k < 3 || k % 2 == 0 {
        return invalid(format!("coloring_two_cliques needs odd k >= 3, got {k}"));
    }
    if n < 2 * k {
        return invalid(format!("coloring_two_cliques needs n >= 2k = {}, got {n}", 2 * k));
    }
    EdgeColoring::rainbow_support(n, &complete(k).union(&complete(k)))
}

/// `K_{k-1} ∪ C'` rainbow, filler elsewhere: `k² - 3k/2 + 1` colors.
pub fn coloring_clique_plus_c(n: usize, k: usize) -> Result<EdgeColoring> {
    if k < 4 || k % 2 == 1 {
        return invalid(format!("coloring_clique_plus_c needs even k >= 4, got {k}"));
    }
    if n < 2 * k {
        return invalid(format!("coloring_clique_plus_c needs n >= 2k = {}, got {n}", 2 * k));
    }
    EdgeColoring::rainbow_support(n, &build_d_member(k)?)
}

/// The `F_k`-free extremal graph rainbow, filler elsewhere: `ex(n, F_k) + 1` colors.
pub fn coloring_lower_friendship(n: usize, k: usize) -> Result<EdgeColoring> {
    let support = build_ex_friendship(n, k)?;
    EdgeColoring::rainbow_support(n, &support)
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    n: usize,
    r: usize,
    edges: Vec<[u64; 3]>,
}

/// `{"n":..,"r":..,"edges":[[u,v,color],...]}` with rows in lexicographic order.
pub fn to_json(c: &EdgeColoring) -> String {
    let edges = complete_edges(c.n).map(|e| [e.u as u64, e.v as u64, c.color(e.u, e.v) as u64]).collect();
    serde_json::to_string(&ColoringJson { n: c.n, r: c.r, edges }).expect("plain data serializes")
}

/// Parses the JSON format; rows may come in any order but must cover `E(K_n)`
/// exactly once, and `r` must match after normalization.
pub fn from_json(text: &str) -> Result<EdgeColoring> {
    let parse = |m: String| Error::Parse(m);
    let j: ColoringJson = serde_json::from_str(text).map_err(|e| parse(e.to_string()))?;
    let n = j.n;
    let mut colors = vec![None; n * n.saturating_sub(1) / 2];
    for [u, v, c] in j.edges {
        let (u, v) = (u as usize, v as usize);
        if u == v || u >= n || v >= n {
            return Err(parse(format!("bad edge ({u}, {v}) for n = {n}")));
        }
        let slot = &mut colors[pair_index(n, u, v)];
        if slot.replace(c).is_some() {
            return Err(parse(format!("edge ({u}, {v}) listed twice")));
        }
    }
    let colors: Vec<u64> = colors
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| parse("some edge of K_n has no color".into()))?;
    let c = EdgeColoring::from_raw(n, &colors);
    if c.r != j.r {
        return Err(parse(format!("declared r = {} but {} colors occur", j.r, c.r)));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{ar_star_matching, ex_friendship};
    use crate::matching::matching_number;

    #[test]
    fn pair_index_is_lexicographic() {
        for n in 2..9 {
            for (i, e) in complete_edges(n).enumerate() {
                assert_eq!(pair_index(n, e.u, e.v), i);
                assert_eq!(pair_index(n, e.v, e.u), i);
            }
        }
    }

    #[test]
    fn normalization_is_first_appearance() {
        let c = EdgeColoring::from_edge_colors(3, &[9, 4, 9]).unwrap();
        assert_eq!(c.edge_colors(), vec![1, 2, 1]);
        assert_eq!(c.r(), 2);
        assert_eq!(normalize(&c), c);
        assert!(EdgeColoring::from_edge_colors(3, &[1, 2]).is_err());
    }

    #[test]
    fn classes_partition_the_edges() {
        let c = coloring_two_cliques(9, 3).unwrap();
        let classes = color_classes(&c);
        assert_eq!(classes.len(), c.r());
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), 36);
    }

    #[test]
    fn advertised_color_counts() {
        assert_eq!(colors_used(&coloring_k2_star(7).unwrap()), 3);
        assert_eq!(colors_used(&coloring_two_cliques(27, 3).unwrap()), 7);
        assert_eq!(colors_used(&coloring_clique_plus_c(48, 4).unwrap()), 11);
        assert_eq!(colors_used(&coloring_lower_friendship(30, 2).unwrap()), 227);
        assert_eq!(colors_used(&coloring_lower_friendship(10, 1).unwrap()), 26);
        for k in 2..=5u64 {
            let n = 3 * k * k;
            let c = match k {
                2 => coloring_k2_star(n as usize).unwrap(),
                k if k % 2 == 1 => coloring_two_cliques(n as usize, k as usize).unwrap(),
                k => coloring_clique_plus_c(n as usize, k as usize).unwrap(),
            };
            assert_eq!(c.r() as u64 + 1, ar_star_matching(n, k).unwrap().value);
        }
        for n in [10u64, 20, 30] {
            assert_eq!(coloring_lower_friendship(n as usize, 2).unwrap().r() as u64, ex_friendship(n, 2).unwrap().value + 1);
        }
    }

    #[test]
    fn construction_errors() {
        assert!(coloring_k2_star(3).is_err());
        assert!(coloring_two_cliques(27, 4).is_err());
        assert!(coloring_two_cliques(5, 3).is_err());
        assert!(coloring_clique_plus_c(48, 5).is_err());
        assert!(coloring_lower_friendship(8, 3).is_err());
    }

    #[test]
    fn representatives() {
        let k4 = EdgeColoring::rainbow(4);
        assert_eq!(representative_rainbow_subgraph(&k4, TieBreak::LexSmallest), complete(4));
        let mono = EdgeColoring::monochromatic(5);
        assert_eq!(representative_rainbow_subgraph(&mono, TieBreak::LexSmallest).edge_count(), 1);
        let c = coloring_two_cliques(27, 3).unwrap();
        let g = representative_rainbow_subgraph(&c, TieBreak::LexSmallest);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(representative_rainbow_subgraph(&c, TieBreak::LexLargest).edge_count(), 7);
    }

    #[test]
    fn clique_plus_c_support_matching() {
        let c = coloring_clique_plus_c(48, 4).unwrap();
        let classes = color_classes(&c);
        let support: Vec<Edge> = classes.iter().filter(|cl| cl.len() == 1).map(|cl| cl[0]).collect();
        let g = Graph::from_edges(48, &support).unwrap();
        assert_eq!(matching_number(&g), 3);
    }

    #[test]
    fn json_round_trip() {
        let c = coloring_k2_star(4).unwrap();
        let text = to_json(&c);
        assert_eq!(text, r#"{"n":4,"r":3,"edges":[[0,1,1],[0,2,2],[0,3,2],[1,2,3],[1,3,3],[2,3,3]]}"#);
        assert_eq!(from_json(&text).unwrap(), c);
        assert!(from_json(r#"{"n":3,"r":1,"edges":[[0,1,1],[0,2,1]]}"#).is_err());
        assert!(from_json(r#"{"n":3,"r":2,"edges":[[0,1,1],[0,2,1],[1,2,1]]}"#).is_err());
    }

    #[test]
    fn split_refines() {
        let c = EdgeColoring::monochromatic(4);
        let d = c.split_class(1, &[Edge::new(2, 3)]).unwrap();
        assert_eq!(d.r(), 2);
        assert!(c.split_class(2, &[Edge::new(2, 3)]).is_err());
    }
}
