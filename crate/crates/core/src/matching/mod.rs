//! Exact maximum matchings and the structures built on them.

mod blossom;
mod gallai_edmonds;

pub use gallai_edmonds::{check_ge, gallai_edmonds, verify_ge, GEDecomposition};

use crate::bits::{bit, contains, Bits, VertexSet};
use crate::graph::{Edge, Graph};
use serde::{Deserialize, Serialize};

/// A set of pairwise disjoint edges, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(mut edges: Vec<Edge>) -> Self {
        edges.sort();
        Matching { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.iter().fold(0, |acc, e| acc | bit(e.u) | bit(e.v))
    }

    /// True when the edges are disjoint and all present in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen: VertexSet = 0;
        for e in &self.edges {
            if e.u >= g.n() || e.v >= g.n() || !g.has_edge(e.u, e.v) {
                return false;
            }
            if contains(seen, e.u) || contains(seen, e.v) {
                return false;
            }
            seen |= bit(e.u) | bit(e.v);
        }
        true
    }

    fn from_mates(mate: &[usize]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != blossom::NONE && v < m)
            .map(|(v, &m)| Edge { u: v, v: m })
            .collect();
        Matching { edges }
    }
}

/// A maximum matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    Matching::from_mates(&blossom::mates_within(g, g.vertex_mask()))
}

/// A maximum matching of `G[within]` using the original vertex names.
pub fn maximum_matching_within(g: &Graph, within: VertexSet) -> Matching {
    Matching::from_mates(&blossom::mates_within(g, within & g.vertex_mask()))
}

/// `ν(G)`.
pub fn matching_number(g: &Graph) -> usize {
    matching_number_within(g, g.vertex_mask())
}

pub fn matching_number_within(g: &Graph, within: VertexSet) -> usize {
    blossom::mates_within(g, within & g.vertex_mask())
        .iter()
        .filter(|&&m| m != blossom::NONE)
        .count()
        / 2
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n() % 2 == 0 && 2 * matching_number(g) == g.n()
}

pub(crate) fn has_perfect_matching_within(g: &Graph, within: VertexSet) -> bool {
    let size = within.count_ones() as usize;
    size % 2 == 0 && 2 * matching_number_within(g, within) == size
}

/// `G` is factor-critical: `G - v` has a perfect matching for every vertex `v`.
pub fn is_factor_critical(g: &Graph) -> bool {
    is_factor_critical_within(g, g.vertex_mask())
}

pub(crate) fn is_factor_critical_within(g: &Graph, within: VertexSet) -> bool {
    let size = within.count_ones() as usize;
    if size % 2 == 0 {
        return false;
    }
    Bits(within).all(|v| has_perfect_matching_within(g, within & !bit(v)))
}

/// A matching covering all vertices but one; that vertex is `avoid` when given.
pub fn near_perfect_matching(g: &Graph, avoid: Option<usize>) -> Option<Matching> {
    if g.n() % 2 == 0 {
        return None;
    }
    let within = match avoid {
        Some(v) if v >= g.n() => return None,
        Some(v) => g.vertex_mask() & !bit(v),
        None => g.vertex_mask(),
    };
    let m = maximum_matching_within(g, within);
    (2 * m.len() + 1 == g.n()).then_some(m)
}

/// A set `T` with more odd components in `G - T` than `|T|`, or `None` when `G`
/// has a perfect matching.
///
/// Subsets are tried in increasing size (lexicographic within a size), so the
/// answer is a smallest violator. The Gallai–Edmonds set `A(G)` is always a
/// violator, which bounds the search; when the number of candidate subsets
/// would exceed `SUBSET_BUDGET`, `A(G)` is returned directly.
pub fn tutte_violator(g: &Graph) -> Option<Vec<usize>> {
    const SUBSET_BUDGET: u64 = 1 << 22;
    if has_perfect_matching(g) {
        return None;
    }
    let ge = gallai_edmonds(g);
    let bound = ge.a.len();
    let n = g.n();
    let mut total = 0u64;
    for s in 0..bound {
        total = total.saturating_add(binomial(n as u64, s as u64));
    }
    if total <= SUBSET_BUDGET {
        for s in 0..bound {
            let mut combo: Vec<usize> = (0..s).collect();
            loop {
                let t = crate::bits::set_of(&combo);
                if g.odd_components_mask(t) > s {
                    return Some(combo);
                }
                if !next_combination(&mut combo, n) {
                    break;
                }
            }
        }
    }
    Some(ge.a)
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every maximum matching of `g`, in lexicographic order of their sorted
/// edge lists, or `None` if there are more than `limit`.
pub fn all_maximum_matchings(g: &Graph, limit: usize) -> Option<Vec<Matching>> {
    let nu = matching_number(g);
    let slack = g.n() - 2 * nu;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(nu);
    let ok = extend_matchings(g, g.vertex_mask(), slack, &mut current, &mut out, limit);
    ok.then_some(out)
}

fn extend_matchings(
    g: &Graph,
    free: VertexSet,
    slack: usize,
    current: &mut Vec<Edge>,
    out: &mut Vec<Matching>,
    limit: usize,
) -> bool {
    if free == 0 {
        out.push(Matching { edges: current.clone() });
        return out.len() <= limit;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !bit(v);
    for w in Bits(g.neighbors(v) & rest) {
        current.push(Edge { u: v, v: w });
        let ok = extend_matchings(g, rest & !bit(w), slack, current, out, limit);
        current.pop();
        if !ok {
            return false;
        }
    }
    if slack > 0 {
        return extend_matchings(g, rest, slack - 1, current, out, limit);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, friendship, path, star};

    #[test]
    fn maximum_matching_sizes() {
        assert_eq!(maximum_matching(&complete(4)).len(), 2);
        assert_eq!(maximum_matching(&star(5)).len(), 1);
        for k in 1..6 {
            let f = friendship(k).unwrap();
            let m = maximum_matching(&f);
            assert_eq!(m.len(), k);
            assert!(m.is_valid_in(&f));
        }
    }

    #[test]
    fn matching_numbers() {
        assert_eq!(matching_number(&Graph::empty(6)), 0);
        assert_eq!(matching_number(&cycle(5).unwrap()), 2);
        for k in [3, 5, 7] {
            assert_eq!(matching_number(&complete(k).union(&complete(k))), k - 1);
        }
        assert_eq!(matching_number(&complete_bipartite(3, 7)), 3);
    }

    #[test]
    fn tutte_violators() {
        assert_eq!(tutte_violator(&complete(4)), None);
        assert_eq!(tutte_violator(&complete(3)), Some(vec![]));
        assert_eq!(tutte_violator(&star(3)), Some(vec![0]));
        let t = tutte_violator(&complete_bipartite(2, 5)).unwrap();
        let g = complete_bipartite(2, 5);
        assert!(g.odd_components(&t).unwrap() > t.len());
    }

    #[test]
    fn factor_critical_examples() {
        assert!(is_factor_critical(&cycle(5).unwrap()));
        assert!(!is_factor_critical(&complete(4)));
        assert!(is_factor_critical(&complete(1)));
        assert!(is_factor_critical(&friendship(3).unwrap()));
        assert!(!is_factor_critical(&path(3)));
    }

    #[test]
    fn near_perfect_examples() {
        let c5 = cycle(5).unwrap();
        for v in 0..5 {
            let m = near_perfect_matching(&c5, Some(v)).unwrap();
            assert_eq!(m.len(), 2);
            assert_eq!(m.covered() & bit(v), 0);
        }
        assert!(near_perfect_matching(&star(3).padded(5), None).is_none());
        assert_eq!(near_perfect_matching(&complete(5), Some(2)).unwrap().len(), 2);
        assert!(near_perfect_matching(&complete(4), None).is_none());
    }

    #[test]
    fn enumerates_all_maximum_matchings() {
        assert_eq!(all_maximum_matchings(&complete(4), 100).unwrap().len(), 3);
        assert_eq!(all_maximum_matchings(&complete(6), 100).unwrap().len(), 15);
        // C5: five near-perfect matchings.
        assert_eq!(all_maximum_matchings(&cycle(5).unwrap(), 100).unwrap().len(), 5);
        assert_eq!(all_maximum_matchings(&star(4), 100).unwrap().len(), 4);
        assert!(all_maximum_matchings(&complete(8), 10).is_none());
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(binomial(10, 3), 120);
    }
}
