//! (Nearly) regular factor-critical graphs.

use crate::error::{Error, Result};
use crate::graph::{canonical_form, enumerate_graphs, Constraints, Graph, MAX_VERTICES};
use crate::matching::is_factor_critical;

/// Largest order for which the exhaustive fallback search is attempted.
const FALLBACK_MAX_ORDER: usize = 11;

/// The shape required of the factor-critical block of degree `delta`:
/// `delta`-regular for even `delta`, nearly `delta`-regular for odd `delta`.
pub fn has_block_degrees(g: &Graph, delta: usize) -> bool {
    if delta % 2 == 0 {
        g.is_regular(delta)
    } else {
        g.is_nearly_regular(delta)
    }
}

fn check_feasible(delta: usize, order: usize) -> Result<()> {
    if order % 2 == 0 {
        return Err(Error::Infeasible(format!("factor-critical graphs have odd order, got {order}")));
    }
    if delta < 2 {
        return Err(Error::Infeasible(format!(
            "a factor-critical graph on at least 3 vertices has minimum degree >= 2, got Δ = {delta}"
        )));
    }
    let min_order = if delta % 2 == 0 { delta + 1 } else { delta + 2 };
    if order < min_order {
        return Err(Error::Infeasible(format!(
            "no {}{delta}-regular graph on {order} vertices (needs at least {min_order})",
            if delta % 2 == 1 { "nearly " } else { "" }
        )));
    }
    if order > MAX_VERTICES {
        return Err(Error::Infeasible(format!("order {order} exceeds {MAX_VERTICES}")));
    }
    Ok(())
}

/// A factor-critical graph on `order` vertices that is `delta`-regular
/// (even `delta`) or nearly `delta`-regular (odd `delta`).
///
/// The first attempt is a circulant: jumps `1..=⌊delta/2⌋`, plus for odd
/// `delta` the near-perfect matching `{i, i + (order-1)/2}`. It contains the
/// Hamiltonian cycle of jump 1, and an odd spanning cycle makes a graph
/// factor-critical. If that ever fails verification, an exhaustive search over
/// small orders takes over. The result is always verified before return.
pub fn build_nearly_regular_factor_critical(delta: usize, order: usize) -> Result<Graph> {
    check_feasible(delta, order)?;
    let seed = circulant_seed(delta, order);
    if has_block_degrees(&seed, delta) && is_factor_critical(&seed) {
        return Ok(seed);
    }
    if order <= FALLBACK_MAX_ORDER {
        if let Some(g) = block_classes(delta, order).into_iter().next() {
            return Ok(g);
        }
    }
    Err(Error::NotFound(format!(
        "no (nearly) {delta}-regular factor-critical graph of order {order} found"
    )))
}

fn circulant_seed(delta: usize, order: usize) -> Graph {
    let mut g = Graph::empty(order);
    for v in 0..order {
        for jump in 1..=delta / 2 {
            g.insert_edge(v, (v + jump) % order);
        }
    }
    if delta % 2 == 1 {
        let half = (order - 1) / 2;
        for i in 0..half {
            g.insert_edge(i, i + half);
        }
    }
    g
}

/// Every isomorphism class of (nearly) `delta`-regular factor-critical graphs
/// of the given order, found by constrained enumeration. Sparse targets are
/// enumerated directly, dense ones through their complements.
pub fn block_classes(delta: usize, order: usize) -> Vec<Graph> {
    if check_feasible(delta, order).is_err() {
        return Vec::new();
    }
    let degree_sum = order * delta - usize::from(delta % 2 == 1);
    let edges = degree_sum / 2;
    let total = order * (order - 1) / 2;
    let complement_degree = order - delta;
    let candidates: Vec<Graph> = if delta <= complement_degree {
        let c = Constraints { max_degree: Some(delta), exact_edges: Some(edges), ..Default::default() };
        enumerate_graphs(order, &c).graphs.into_iter().map(|g| g.padded(order)).collect()
    } else {
        let c = Constraints {
            max_degree: Some(complement_degree),
            exact_edges: Some(total - edges),
            ..Default::default()
        };
        enumerate_graphs(order, &c)
            .graphs
            .into_iter()
            .map(|g| g.padded(order).complement())
            .collect()
    };
    let mut out: Vec<Graph> = candidates
        .into_iter()
        .filter(|g| g.n() == order && has_block_degrees(g, delta) && is_factor_critical(g))
        .collect();
    out.sort_by_cached_key(canonical_form);
    out
}

/// The unique vertex of degree `delta - 1` in a nearly regular block.
pub(crate) fn deficient_vertex(g: &Graph, vertices: u128, delta: usize) -> Option<usize> {
    let mut found = None;
    for v in crate::bits::Bits(vertices) {
        if g.degree(v) + 1 == delta {
            if found.is_some() {
                return None;
            }
            found = Some(v);
        }
    }
    found
}
