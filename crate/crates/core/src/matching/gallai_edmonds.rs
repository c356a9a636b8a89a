//! Canonical (Gallai–Edmonds) decomposition `(D, A, C)`.

use super::{
    all_maximum_matchings, has_perfect_matching_within, is_factor_critical_within, matching_number,
    matching_number_within,
};
use crate::bits::{bit, contains, set_of, Bits, VertexSet};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Upper bound on maximum matchings enumerated by [`verify_ge`].
const MATCHING_ENUMERATION_LIMIT: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GEDecomposition {
    /// Connected components of `G[D]`, each sorted, ordered by least vertex.
    pub d_components: Vec<Vec<usize>>,
    pub a: Vec<usize>,
    pub c: Vec<usize>,
}

impl GEDecomposition {
    pub fn d(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.d_components.iter().flatten().copied().collect();
        d.sort_unstable();
        d
    }
}

/// Computes `D` by definition (`v ∈ D` iff `ν(G - v) = ν(G)`), then
/// `A = N(D) \ D` and `C = V \ (D ∪ A)`.
pub fn gallai_edmonds(g: &Graph) -> GEDecomposition {
    let nu = matching_number(g);
    let all = g.vertex_mask();
    let d: VertexSet = Bits(all)
        .filter(|&v| matching_number_within(g, all & !bit(v)) == nu)
        .fold(0, |acc, v| acc | bit(v));
    let a = Bits(d).fold(0, |acc, v| acc | g.neighbors(v)) & !d;
    let c = all & !d & !a;
    GEDecomposition {
        d_components: g.components_within(d).into_iter().map(|m| Bits(m).collect()).collect(),
        a: Bits(a).collect(),
        c: Bits(c).collect(),
    }
}

pub fn verify_ge(g: &Graph, dec: &GEDecomposition) -> bool {
    check_ge(g, dec).is_ok()
}

/// Checks a claimed decomposition against the structure theorem and reports
/// the first failed condition.
///
/// Checked: the three sets partition `V`; `A` is exactly `N(D) \ D`; the
/// listed `D` components are the components of `G[D]`; every `D` component is
/// factor-critical; `G[C]` has a perfect matching; every maximum matching is
/// near-perfect on each `D` component, perfect on `C` and matches `A` into
/// distinct `D` components; `ν = |A| + |C|/2 + Σ (|D_i| - 1)/2`. Maximum
/// matchings are enumerated exhaustively up to 200 000 of them; beyond that
/// only the first ones found are checked.
pub fn check_ge(g: &Graph, dec: &GEDecomposition) -> Result<(), String> {
    let n = g.n();
    let all = g.vertex_mask();
    let mut seen: VertexSet = 0;
    for &v in dec.d_components.iter().flatten().chain(&dec.a).chain(&dec.c) {
        if v >= n || contains(seen, v) {
            return Err(format!("vertex {v} out of range or listed twice"));
        }
        seen |= bit(v);
    }
    if seen != all {
        return Err("D, A, C do not cover V".into());
    }
    let d = set_of(&dec.d());
    let a = set_of(&dec.a);
    let c = set_of(&dec.c);
    let neighborhood_of_d = Bits(d).fold(0, |acc, v| acc | g.neighbors(v)) & !d;
    if neighborhood_of_d != a {
        return Err("A is not N(D) \\ D".into());
    }
    let mut comps: Vec<VertexSet> = dec.d_components.iter().map(|k| set_of(k)).collect();
    comps.sort_unstable();
    let mut actual = g.components_within(d);
    actual.sort_unstable();
    if comps != actual {
        return Err("listed D components are not the components of G[D]".into());
    }
    for &k in &comps {
        if !is_factor_critical_within(g, k) {
            return Err(format!("D component {:?} is not factor-critical", Bits(k).collect::<Vec<_>>()));
        }
    }
    if !has_perfect_matching_within(g, c) {
        return Err("G[C] has no perfect matching".into());
    }
    let nu = matching_number(g);
    let predicted = dec.a.len()
        + dec.c.len() / 2
        + comps.iter().map(|k| (k.count_ones() as usize - 1) / 2).sum::<usize>();
    if nu != predicted {
        return Err(format!("ν = {nu} but |A| + |C|/2 + Σ(|D_i|-1)/2 = {predicted}"));
    }
    let matchings = match all_maximum_matchings(g, MATCHING_ENUMERATION_LIMIT) {
        Some(ms) => ms,
        None => vec![super::maximum_matching(g)],
    };
    let comp_of = |v: usize| comps.iter().position(|&k| contains(k, v));
    for m in &matchings {
        let mut inside = vec![0usize; comps.len()];
        let mut inside_c = 0usize;
        let mut a_targets: VertexSet = 0;
        let mut a_matched = 0usize;
        for e in m.edges() {
            let (cu, cv) = (comp_of(e.u), comp_of(e.v));
            match (cu, cv) {
                (Some(x), Some(y)) if x == y => inside[x] += 1,
                (Some(_), Some(_)) => return Err("maximum matching joins two D components".into()),
                _ => {}
            }
            if contains(c, e.u) && contains(c, e.v) {
                inside_c += 1;
            } else if contains(c, e.u) || contains(c, e.v) {
                return Err("maximum matching leaves C".into());
            }
            for (x, y) in [(e.u, e.v), (e.v, e.u)] {
                if contains(a, x) {
                    let Some(k) = comp_of(y) else {
                        return Err(format!("A vertex {x} matched outside D"));
                    };
                    if contains(a_targets, k) {
                        return Err("two A vertices matched into the same D component".into());
                    }
                    a_targets |= bit(k);
                    a_matched += 1;
                }
            }
        }
        if a_matched != dec.a.len() {
            return Err("some A vertex is unmatched by a maximum matching".into());
        }
        if 2 * inside_c != dec.c.len() {
            return Err("maximum matching is not perfect on C".into());
        }
        for (i, &k) in comps.iter().enumerate() {
            if 2 * inside[i] + 1 != k.count_ones() as usize {
                return Err("maximum matching is not near-perfect on a D component".into());
            }
        }
    }
    Ok(())
}
