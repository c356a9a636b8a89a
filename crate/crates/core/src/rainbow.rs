//! Exact search for rainbow stars, matchings and friendship graphs in an
//! edge-colored `K_n`.
//!
//! Every embedding is checked against the coloring before it is returned.

use crate::bits::{bit, VertexSet};
use crate::colorings::{color_classes, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Edge;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A target pattern: `K_{1,s}`, `sK_2` or `F_s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "pattern", content = "size", rename_all = "lowercase")]
pub enum PatternSpec {
    Star(usize),
    Matching(usize),
    Friendship(usize),
}

impl PatternSpec {
    pub fn size(&self) -> usize {
        match *self {
            PatternSpec::Star(s) | PatternSpec::Matching(s) | PatternSpec::Friendship(s) => s,
        }
    }

    fn rank(&self) -> (u8, usize) {
        match *self {
            PatternSpec::Star(s) => (0, s),
            PatternSpec::Matching(s) => (1, s),
            PatternSpec::Friendship(s) => (2, s),
        }
    }

    /// Parses `K1,4`, `4K2` or `F3`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let bad = || Error::Parse(format!("unknown pattern {text:?} (expected K1,s or sK2 or Fs)"));
        let num = |s: &str| s.parse::<usize>().ok().filter(|&x| x >= 1).ok_or_else(bad);
        if let Some(rest) = t.strip_prefix("K1,") {
            Ok(PatternSpec::Star(num(rest)?))
        } else if let Some(rest) = t.strip_suffix("K2") {
            Ok(PatternSpec::Matching(if rest.is_empty() { 1 } else { num(rest)? }))
        } else if let Some(rest) = t.strip_prefix('F') {
            Ok(PatternSpec::Friendship(num(rest)?))
        } else {
            Err(bad())
        }
    }

    /// Parses a `;`-separated list such as `K1,4;4K2`.
    pub fn parse_list(text: &str) -> Result<Vec<Self>> {
        text.split(';').filter(|s| !s.trim().is_empty()).map(Self::parse).collect()
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PatternSpec::Star(s) => write!(f, "K1,{s}"),
            PatternSpec::Matching(s) => write!(f, "{s}K2"),
            PatternSpec::Friendship(s) => write!(f, "F{s}"),
        }
    }
}

/// A rainbow copy found in a coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowEmbedding {
    pub pattern: PatternSpec,
    pub center: Option<usize>,
    pub edges: Vec<Edge>,
    pub colors: Vec<Color>,
}

impl RainbowEmbedding {
    fn new(pattern: PatternSpec, center: Option<usize>, edges: Vec<Edge>, c: &EdgeColoring) -> Self {
        let colors = edges.iter().map(|e| c.color(e.u, e.v)).collect();
        let emb = RainbowEmbedding { pattern, center, edges, colors };
        assert!(emb.verify(c), "rainbow search produced an invalid embedding: {emb:?}");
        emb
    }

    /// Checks shape, host colors and distinctness of colors.
    pub fn verify(&self, c: &EdgeColoring) -> bool {
        let n = c.n();
        if self.edges.len() != self.colors.len()
            || self.edges.iter().any(|e| e.u >= e.v || e.v >= n)
            || self.edges.iter().zip(&self.colors).any(|(e, &col)| c.color(e.u, e.v) != col)
        {
            return false;
        }
        let mut seen = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.colors.len() {
            return false;
        }
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges.dedup();
        if edges.len() != self.edges.len() {
            return false;
        }
        match (self.pattern, self.center) {
            (PatternSpec::Star(s), Some(v)) => self.edges.len() == s && self.edges.iter().all(|e| e.touches(v)),
            (PatternSpec::Matching(s), None) => {
                let mut used: VertexSet = 0;
                self.edges.len() == s
                    && self.edges.iter().all(|e| {
                        let m = bit(e.u) | bit(e.v);
                        let ok = used & m == 0;
                        used |= m;
                        ok
                    })
            }
            (PatternSpec::Friendship(s), Some(v)) => {
                if self.edges.len() != 3 * s {
                    return false;
                }
                let spokes: Vec<usize> = self.edges.iter().filter(|e| e.touches(v)).map(|e| e.other(v)).collect();
                let rims: Vec<&Edge> = self.edges.iter().filter(|e| !e.touches(v)).collect();
                let spoke_set = spokes.iter().fold(0, |a, &x| a | bit(x));
                spokes.len() == 2 * s
                    && spoke_set.count_ones() as usize == 2 * s
                    && rims.len() == s
                    && rims.iter().fold(0, |a, e| a | bit(e.u) | bit(e.v)) == spoke_set
            }
            _ => false,
        }
    }
}

fn centers_by_color_count(c: &EdgeColoring) -> Vec<(usize, usize)> {
    let mut centers: Vec<(usize, usize)> = (0..c.n())
        .map(|v| {
            let mut cols: Vec<Color> = (0..c.n()).filter(|&u| u != v).map(|u| c.color(u, v)).collect();
            cols.sort_unstable();
            cols.dedup();
            (v, cols.len())
        })
        .collect();
    centers.sort_by_key(|&(v, k)| (std::cmp::Reverse(k), v));
    centers
}

/// A center with `s` incident edges of distinct colors.
pub fn find_rainbow_star(c: &EdgeColoring, s: usize) -> Option<RainbowEmbedding> {
    assert!(s >= 1, "K_(1,s) needs s >= 1");
    let (v, count) = *centers_by_color_count(c).first()?;
    if count < s {
        return None;
    }
    let mut seen = std::collections::HashSet::new();
    let edges: Vec<Edge> = (0..c.n())
        .filter(|&u| u != v && seen.insert(c.color(u, v)))
        .take(s)
        .map(|u| Edge::new(u, v))
        .collect();
    Some(RainbowEmbedding::new(PatternSpec::Star(s), Some(v), edges, c))
}

struct MatchingSearch<'a> {
    classes: &'a [Vec<Edge>],
    target: usize,
    chosen: Vec<Edge>,
}

impl MatchingSearch<'_> {
    fn run(&mut self, next: usize, used: VertexSet, free_vertices: usize) -> bool {
        if self.chosen.len() == self.target {
            return true;
        }
        let need = self.target - self.chosen.len();
        if free_vertices < 2 * need {
            return false;
        }
        let avail = |cl: &Vec<Edge>| cl.iter().any(|e| used & (bit(e.u) | bit(e.v)) == 0);
        let live: usize = self.classes[next..].iter().filter(|cl| avail(cl)).count();
        if live < need {
            return false;
        }
        for ci in next..self.classes.len() {
            let class = &self.classes[ci];
            for &e in class {
                let m = bit(e.u) | bit(e.v);
                if used & m != 0 {
                    continue;
                }
                self.chosen.push(e);
                if self.run(ci + 1, used | m, free_vertices - 2) {
                    return true;
                }
                self.chosen.pop();
            }
            let remaining = self.classes[ci + 1..].iter().filter(|cl| avail(cl)).count();
            if remaining < need {
                return false;
            }
        }
        false
    }
}

/// `s` disjoint edges with pairwise distinct colors.
pub fn find_rainbow_matching(c: &EdgeColoring, s: usize) -> Option<RainbowEmbedding> {
    assert!(s >= 1, "sK_2 needs s >= 1");
    let classes = color_classes(c);
    let mut search = MatchingSearch { classes: &classes, target: s, chosen: Vec::new() };
    search
        .run(0, 0, c.n())
        .then(|| RainbowEmbedding::new(PatternSpec::Matching(s), None, search.chosen, c))
}

#[derive(Clone, Copy)]
struct Triangle {
    a: usize,
    b: usize,
    mask: VertexSet,
    colors: [Color; 3],
}

struct ColorSet(Vec<u64>);

impl ColorSet {
    fn new(r: usize) -> Self {
        ColorSet(vec![0; r / 64 + 1])
    }
    fn has(&self, c: Color) -> bool {
        (self.0[c as usize / 64] >> (c % 64)) & 1 == 1
    }
    fn flip(&mut self, c: Color) {
        self.0[c as usize / 64] ^= 1 << (c % 64);
    }
}

fn pick_triangles(tris: &[Triangle], start: usize, need: usize, used: VertexSet, colors: &mut ColorSet, out: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    for i in start..tris.len() {
        if tris.len() - i < need {
            return false;
        }
        let t = &tris[i];
        if used & t.mask != 0 || t.colors.iter().any(|&x| colors.has(x)) {
            continue;
        }
        t.colors.iter().for_each(|&x| colors.flip(x));
        out.push(i);
        if pick_triangles(tris, i + 1, need - 1, used | t.mask, colors, out) {
            return true;
        }
        out.pop();
        t.colors.iter().for_each(|&x| colors.flip(x));
    }
    false
}

fn friendship_at(c: &EdgeColoring, v: usize, s: usize) -> Option<Vec<Edge>> {
    let n = c.n();
    let mut tris = Vec::new();
    for a in (0..n).filter(|&a| a != v) {
        for b in (a + 1..n).filter(|&b| b != v) {
            let colors = [c.color(v, a), c.color(v, b), c.color(a, b)];
            if colors[0] != colors[1] && colors[0] != colors[2] && colors[1] != colors[2] {
                tris.push(Triangle { a, b, mask: bit(a) | bit(b), colors });
            }
        }
    }
    let mut chosen = Vec::new();
    let mut colors = ColorSet::new(c.r());
    pick_triangles(&tris, 0, s, 0, &mut colors, &mut chosen).then(|| {
        chosen
            .iter()
            .flat_map(|&i| {
                let t = tris[i];
                [Edge::new(v, t.a), Edge::new(v, t.b), Edge::new(t.a, t.b)]
            })
            .collect()
    })
}

/// A center and `s` disjoint pairs forming `F_s` with all `3s` colors distinct.
pub fn find_rainbow_friendship(c: &EdgeColoring, s: usize) -> Option<RainbowEmbedding> {
    assert!(s >= 1, "F_s needs s >= 1");
    if c.n() < 2 * s + 1 || c.r() < 3 * s {
        return None;
    }
    let centers = centers_by_color_count(c);
    let (v, edges) = centers
        .par_iter()
        .filter(|&&(_, count)| count >= 2 * s)
        .find_map_first(|&(v, _)| friendship_at(c, v, s).map(|e| (v, e)))?;
    Some(RainbowEmbedding::new(PatternSpec::Friendship(s), Some(v), edges, c))
}

/// Searches one pattern.
pub fn find_rainbow(c: &EdgeColoring, p: PatternSpec) -> Option<RainbowEmbedding> {
    match p {
        PatternSpec::Star(s) => find_rainbow_star(c, s),
        PatternSpec::Matching(s) => find_rainbow_matching(c, s),
        PatternSpec::Friendship(s) => find_rainbow_friendship(c, s),
    }
}

/// First rainbow member of `family`, trying stars, then matchings, then
/// friendship graphs, each by ascending size.
pub fn find_rainbow_in_family(c: &EdgeColoring, family: &[PatternSpec]) -> Option<RainbowEmbedding> {
    let mut order = family.to_vec();
    order.sort_by_key(PatternSpec::rank);
    order.dedup();
    order.into_iter().find_map(|p| find_rainbow(c, p))
}
