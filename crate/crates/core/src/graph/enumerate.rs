//! Exhaustive generation of isomorphism classes under monotone constraints.
//!
//! Classes are generated level by level in the number of edges. Every class
//! with `m + 1` edges is obtained from a class with `m` edges by adding one
//! edge, and all supported constraints are closed under edge deletion, so
//! pruning a child that violates a constraint never loses a class. Children
//! are deduplicated by canonical form; a level is expanded in parallel and
//! merged into a sorted map, so the output order does not depend on the
//! number of workers.
//!
//! Rough desk-scale guidance: unconstrained runs are fine up to 9 vertices
//! (274 668 classes); degree or matching bounds push this much further.

use super::canon::{canonical_form, CanonicalForm};
use super::{Graph, MAX_VERTICES};
use crate::bits::{bit, Bits};
use crate::matching::{matching_number, maximum_matching_within};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Forbidden subgraph used as a pruning constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ForbiddenPattern {
    Triangle,
    Friendship(usize),
}

impl ForbiddenPattern {
    fn triangles(self) -> usize {
        match self {
            ForbiddenPattern::Triangle => 1,
            ForbiddenPattern::Friendship(k) => k,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    pub max_degree: Option<usize>,
    pub max_matching: Option<usize>,
    /// Only report classes with exactly this many edges.
    pub exact_edges: Option<usize>,
    pub forbidden: Option<ForbiddenPattern>,
    /// Resource cap on the number of classes generated across all levels.
    pub max_classes: Option<usize>,
}

/// Outcome of an enumeration run.
#[derive(Clone, Debug, Default)]
pub struct Enumeration {
    /// Canonical representatives (no isolated vertices), sorted by edge count
    /// and then by canonical form.
    pub graphs: Vec<Graph>,
    /// False when `max_classes` stopped the run early.
    pub complete: bool,
    pub classes_generated: u64,
    pub children_examined: u64,
}

pub fn enumerate_graphs(max_vertices: usize, constraints: &Constraints) -> Enumeration {
    let mut graphs = Vec::new();
    let mut run = for_each_graph(max_vertices, constraints, |g| graphs.push(g.clone()));
    run.graphs = graphs;
    run
}

/// Visits one representative per class with at most `max_vertices`
/// non-isolated vertices that satisfies `constraints`.
pub fn for_each_graph(
    max_vertices: usize,
    constraints: &Constraints,
    mut visit: impl FnMut(&Graph),
) -> Enumeration {
    assert!(max_vertices <= MAX_VERTICES);
    let mut report = Enumeration { complete: true, ..Default::default() };
    let mut level: Vec<Node> = vec![Node { graph: Graph::empty(0), nu: 0 }];
    let mut edges = 0usize;
    loop {
        report.classes_generated += level.len() as u64;
        if constraints.exact_edges.is_none_or(|e| e == edges) {
            level.iter().for_each(|node| visit(&node.graph));
        }
        if constraints.exact_edges == Some(edges) {
            break;
        }
        if constraints.max_classes.is_some_and(|cap| report.classes_generated > cap as u64) {
            report.complete = false;
            break;
        }
        let (next, examined) = expand(&level, max_vertices, constraints);
        report.children_examined += examined;
        if next.is_empty() {
            break;
        }
        level = next;
        edges += 1;
    }
    report
}

struct Node {
    graph: Graph,
    nu: usize,
}

fn expand(level: &[Node], max_vertices: usize, constraints: &Constraints) -> (Vec<Node>, u64) {
    let (merged, examined) = level
        .par_iter()
        .fold(
            || (HashMap::<CanonicalForm, Node>::new(), 0u64),
            |(mut acc, mut count), parent| {
                for (u, v) in candidate_edges(&parent.graph, max_vertices) {
                    count += 1;
                    if let Some(child) = admit(parent, u, v, constraints) {
                        acc.entry(canonical_form(&child.graph)).or_insert(child);
                    }
                }
                (acc, count)
            },
        )
        .reduce(
            || (HashMap::new(), 0),
            |(mut a, ca), (b, cb)| {
                if a.len() < b.len() {
                    return merge(b, a, ca + cb);
                }
                for (k, v) in b {
                    a.entry(k).or_insert(v);
                }
                (a, ca + cb)
            },
        );
    let sorted: BTreeMap<CanonicalForm, Node> = merged.into_iter().collect();
    let next = sorted
        .into_iter()
        .map(|(form, node)| Node { graph: form.to_graph(), nu: node.nu })
        .collect();
    (next, examined)
}

fn merge(
    mut a: HashMap<CanonicalForm, Node>,
    b: HashMap<CanonicalForm, Node>,
    count: u64,
) -> (HashMap<CanonicalForm, Node>, u64) {
    for (k, v) in b {
        a.entry(k).or_insert(v);
    }
    (a, count)
}

/// Edges that can be added to a graph without isolated vertices: between
/// existing vertices, from an existing vertex to one new vertex, or between
/// two new vertices.
fn candidate_edges(g: &Graph, max_vertices: usize) -> Vec<(usize, usize)> {
    let k = g.n();
    let mut out = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    if k < max_vertices {
        out.extend((0..k).map(|u| (u, k)));
    }
    if k + 2 <= max_vertices {
        out.push((k, k + 1));
    }
    out
}

fn admit(parent: &Node, u: usize, v: usize, c: &Constraints) -> Option<Node> {
    let k = parent.graph.n();
    let new_n = k.max(v + 1);
    let mut g = if new_n > k { parent.graph.padded(new_n) } else { parent.graph.clone() };
    if let Some(d) = c.max_degree {
        if g.degree(u) + 1 > d || g.degree(v) + 1 > d {
            return None;
        }
    }
    g.insert_edge(u, v);
    if let Some(p) = c.forbidden {
        if creates_friendship(&g, u, v, p.triangles()) {
            return None;
        }
    }
    let nu = match c.max_matching {
        Some(bound) if parent.nu >= bound => {
            let nu = matching_number(&g);
            if nu > bound {
                return None;
            }
            nu
        }
        Some(_) => matching_number(&g),
        None => 0,
    };
    Some(Node { graph: g, nu })
}

/// Whether some copy of `F_s` uses the edge `uv` of `g`. Such a copy has its
/// center at `u`, at `v`, or at a common neighbor.
fn creates_friendship(g: &Graph, u: usize, v: usize, s: usize) -> bool {
    let common = g.neighbors(u) & g.neighbors(v);
    if common == 0 {
        return false;
    }
    if s == 1 {
        return true;
    }
    Bits(common | bit(u) | bit(v))
        .filter(|&c| g.degree(c) >= 2 * s)
        .any(|c| maximum_matching_within(g, g.neighbors(c)).len() >= s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(max_vertices: usize, c: &Constraints) -> usize {
        enumerate_graphs(max_vertices, c).graphs.len()
    }

    #[test]
    fn small_census() {
        let none = Constraints::default();
        assert_eq!(count(3, &none), 4);
        assert_eq!(count(4, &none), 11);
        assert_eq!(count(5, &none), 34);
        assert_eq!(count(6, &none), 156);
    }

    #[test]
    fn degree_one_gives_matchings() {
        let c = Constraints { max_degree: Some(1), ..Default::default() };
        let run = enumerate_graphs(8, &c);
        assert_eq!(run.graphs.len(), 5);
        for g in &run.graphs {
            assert_eq!(g.n(), 2 * g.edge_count());
        }
    }

    #[test]
    fn exact_edges_filters_level() {
        let c = Constraints { exact_edges: Some(3), ..Default::default() };
        let run = enumerate_graphs(4, &c);
        // K_3, P_4, K_{1,3}
        assert_eq!(run.graphs.len(), 3);
        assert!(run.graphs.iter().all(|g| g.edge_count() == 3));
    }

    #[test]
    fn triangle_free_on_five() {
        let c = Constraints { forbidden: Some(ForbiddenPattern::Triangle), ..Default::default() };
        let run = enumerate_graphs(5, &c);
        assert_eq!(run.graphs.iter().map(Graph::edge_count).max(), Some(6));
    }

    #[test]
    fn class_cap_is_reported() {
        let c = Constraints { max_classes: Some(5), ..Default::default() };
        let run = enumerate_graphs(6, &c);
        assert!(!run.complete);
    }

    #[test]
    fn output_is_deterministic_and_distinct() {
        let c = Constraints { max_degree: Some(3), ..Default::default() };
        let a = enumerate_graphs(6, &c).graphs;
        let b = enumerate_graphs(6, &c).graphs;
        assert_eq!(a, b);
        let mut forms: Vec<_> = a.iter().map(canonical_form).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), a.len());
    }
}
