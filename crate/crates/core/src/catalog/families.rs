//! The extremal families `H_{ν,Δ}`, `Γ_{ν,Δ}(H)`, `E_{ν,Δ}`, `D_k`, `F_{ν,Δ}` and
//! the Turán-type family `G(n, k)` of `F_k`-free extremal graphs.
//!
//! A member of `H_{ν,Δ}` is a disjoint union `C ∪ G(X, Y)` where `C` is a
//! factor-critical block (Δ-regular for even Δ, nearly Δ-regular for odd Δ),
//! `G(X, Y)` is bipartite with every `X` vertex of degree Δ, `|X| = ν(G(X, Y))`,
//! and `|X| + (|C| - 1)/2 = ν`. Built members use the vertex layout `C`, then
//! `X`, then `Y`.

use super::formulas::f_formula;
use super::regular::{block_classes, build_nearly_regular_factor_critical, deficient_vertex, has_block_degrees};
use crate::bits::{bit, contains, Bits, VertexSet};
use crate::error::{invalid, Error, Result};
use crate::graph::{canonical_form, complete, turan, CanonicalForm, Graph};
use crate::matching::{is_factor_critical_within, matching_number, matching_number_within};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Parameters naming one member of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilyDescriptor {
    /// `C ∪ G(X, Y)`; `y_degrees` lists the `Y` degrees, `|X|` follows from `ν`
    /// and `|C|`.
    H { nu: usize, delta: usize, c_order: usize, y_degrees: Vec<usize> },
    /// `(H - uv) + uv'` for the `H` member with the same parameters; `u`, `v`
    /// are vertex indices in that member's layout.
    Gamma { nu: usize, delta: usize, c_order: usize, y_degrees: Vec<usize>, u: usize, v: usize },
    /// `K_{k-1} ∪ C` with `C` nearly `(k-1)`-regular factor-critical of order `k+1`.
    D { k: usize },
    /// `T_{n,2}` with a member of `F_{k-1,k-1}` embedded in its larger part.
    #[serde(rename = "EXF")]
    ExFriendship { n: usize, k: usize },
}

impl FamilyDescriptor {
    fn h_parts(&self) -> Option<(usize, usize, usize, &[usize])> {
        match self {
            FamilyDescriptor::H { nu, delta, c_order, y_degrees }
            | FamilyDescriptor::Gamma { nu, delta, c_order, y_degrees, .. } => {
                Some((*nu, *delta, *c_order, y_degrees))
            }
            _ => None,
        }
    }

    /// Size of `X` implied by the parameters.
    pub fn x_size(&self) -> Option<usize> {
        let (nu, _, c_order, _) = self.h_parts()?;
        nu.checked_sub(c_order.checked_sub(1)? / 2)
    }
}

/// Builds the member named by `d`.
pub fn build_member(d: &FamilyDescriptor) -> Result<Graph> {
    match d {
        FamilyDescriptor::H { .. } => build_h_member(d),
        FamilyDescriptor::Gamma { u, v, .. } => {
            let (nu, delta, c_order, y_degrees) = d.h_parts().expect("Gamma carries H parameters");
            let h_desc = FamilyDescriptor::H { nu, delta, c_order, y_degrees: y_degrees.to_vec() };
            let h = build_h_member(&h_desc)?;
            build_gamma_variant(&h, &h_desc, *u, *v)
        }
        FamilyDescriptor::D { k } => build_d_member(*k),
        FamilyDescriptor::ExFriendship { n, k } => build_ex_friendship(*n, *k),
    }
}

/// Checks the arithmetic of the `H` bullets and returns `|X|`.
fn validate_h(nu: usize, delta: usize, c_order: usize, y_degrees: &[usize]) -> Result<usize> {
    if delta < 2 {
        return Err(Error::Infeasible(format!("Δ = {delta}: the block C needs Δ >= 2")));
    }
    if c_order % 2 == 0 || c_order < 3 {
        return Err(Error::Infeasible(format!("|C| = {c_order} must be odd and at least 3")));
    }
    let half = (c_order - 1) / 2;
    let Some(x) = nu.checked_sub(half) else {
        return Err(Error::Infeasible(format!("(|C|-1)/2 = {half} exceeds ν = {nu}")));
    };
    if let Some(&bad) = y_degrees.iter().find(|&&d| d == 0 || d > delta) {
        return Err(Error::Infeasible(format!("Y degree {bad} outside 1..={delta}")));
    }
    let sum: usize = y_degrees.iter().sum();
    if sum != x * delta {
        return Err(Error::Infeasible(format!("Y degrees sum to {sum}, expected |X|·Δ = {}", x * delta)));
    }
    Ok(x)
}

/// Realizes the bipartite part: each `X` vertex takes the `Δ` `Y` vertices of
/// largest residual degree (ties to the lower index).
fn realize_bipartite(x: usize, delta: usize, y_degrees: &[usize]) -> Option<Vec<Vec<usize>>> {
    let mut residual = y_degrees.to_vec();
    let mut rows = Vec::with_capacity(x);
    for _ in 0..x {
        let mut order: Vec<usize> = (0..residual.len()).filter(|&y| residual[y] > 0).collect();
        if order.len() < delta {
            return None;
        }
        order.sort_by_key(|&y| (std::cmp::Reverse(residual[y]), y));
        let chosen: Vec<usize> = order[..delta].to_vec();
        for &y in &chosen {
            residual[y] -= 1;
        }
        rows.push(chosen);
    }
    residual.iter().all(|&r| r == 0).then_some(rows)
}

/// A member of `H_{ν,Δ}`.
pub fn build_h_member(d: &FamilyDescriptor) -> Result<Graph> {
    let FamilyDescriptor::H { nu, delta, c_order, y_degrees } = d else {
        return invalid("build_h_member needs an H descriptor");
    };
    let x = validate_h(*nu, *delta, *c_order, y_degrees)?;
    let rows = realize_bipartite(x, *delta, y_degrees)
        .ok_or_else(|| Error::Infeasible(format!("Y degrees {y_degrees:?} not realizable with |X| = {x}, Δ = {delta}")))?;
    let block = build_nearly_regular_factor_critical(*delta, *c_order)?;
    let total = c_order + x + y_degrees.len();
    if total > crate::graph::MAX_VERTICES {
        return Err(Error::Infeasible(format!("member would have {total} vertices")));
    }
    let mut g = block.padded(total);
    for (i, row) in rows.iter().enumerate() {
        for &y in row {
            g.insert_edge(c_order + i, c_order + x + y);
        }
    }
    Ok(g)
}

/// `(H - uv) + uv'` where `v'` is the vertex of degree `Δ - 1` in `C`.
pub fn build_gamma_variant(h: &Graph, d: &FamilyDescriptor, u: usize, v: usize) -> Result<Graph> {
    let FamilyDescriptor::H { delta, c_order, .. } = d else {
        return invalid("build_gamma_variant needs the H descriptor of its base graph");
    };
    if delta % 2 == 0 {
        return invalid(format!("Γ is defined only for odd Δ, got {delta}"));
    }
    let x = d.x_size().ok_or_else(|| Error::InvalidParameter("descriptor has no X".into()))?;
    let x_range = *c_order..c_order + x;
    if !x_range.contains(&u) {
        return invalid(format!("u = {u} is not an X vertex ({x_range:?})"));
    }
    if v >= h.n() || v < c_order + x || !h.has_edge(u, v) {
        return invalid(format!("v = {v} is not a Y neighbor of u = {u}"));
    }
    let v_prime = deficient_vertex(h, crate::bits::low_mask(*c_order), *delta)
        .ok_or_else(|| Error::InvalidParameter("C has no unique vertex of degree Δ-1".into()))?;
    let mut g = h.clone();
    g.delete_edge(u, v);
    g.insert_edge(u, v_prime);
    Ok(g)
}

/// A member of `D_k`: `K_{k-1} ∪ C`.
pub fn build_d_member(k: usize) -> Result<Graph> {
    if k % 2 == 1 || k < 4 {
        return invalid(format!("D_k needs even k >= 4, got {k}"));
    }
    let block = build_nearly_regular_factor_critical(k - 1, k + 1)?;
    Ok(complete(k - 1).union(&block))
}

/// The member of `F_{j,j}` used inside the `F_{j+1}`-free extremal graphs:
/// `K_2` for `j = 1`, `K_{j+1} ∪ K_{j+1}` for even `j`, and a nearly
/// `j`-regular factor-critical graph of order `2j + 1` for odd `j >= 3`.
pub fn diagonal_extremal_member(j: usize) -> Result<Graph> {
    match j {
        0 => invalid("F_{j,j} needs j >= 1"),
        1 => Ok(complete(2)),
        j if j % 2 == 0 => Ok(complete(j + 1).union(&complete(j + 1))),
        j => build_nearly_regular_factor_critical(j, 2 * j + 1),
    }
}

/// A member of `EX(n, F_k)`: `T_{n,2}` with `diagonal_extremal_member(k-1)`
/// placed on the first vertices of the larger part (empty for `k = 1`).
pub fn build_ex_friendship(n: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return invalid("F_k needs k >= 1");
    }
    if n < 2 {
        return invalid(format!("T_(n,2) needs n >= 2, got {n}"));
    }
    let mut g = turan(n, 2)?;
    if k == 1 {
        return Ok(g);
    }
    let inner = diagonal_extremal_member(k - 1)?;
    let part = n.div_ceil(2);
    if inner.n() > part {
        return Err(Error::Infeasible(format!(
            "the embedded graph has {} vertices but the larger part of T_({n},2) has {part}",
            inner.n()
        )));
    }
    for e in inner.edges() {
        g.insert_edge(e.u, e.v);
    }
    Ok(g)
}

/// `F_{ν,Δ}` membership: `ν(G) <= ν`, `Δ(G) <= Δ`, `e(G) = f(ν, Δ)`.
pub fn is_member_f(g: &Graph, nu: usize, delta: usize) -> bool {
    let Ok(f) = f_formula(nu as u64, delta as u64) else {
        return false;
    };
    g.edge_count() as u64 == f && g.max_degree() <= delta && matching_number(g) <= nu
}

/// One way of reading a graph as `C ∪ G(X, Y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HStructure {
    pub c: VertexSet,
    pub x: VertexSet,
    pub y: VertexSet,
}

/// All readings of `g` (isolated vertices ignored) as a member of `H_{ν,Δ}`.
pub fn h_structures(g: &Graph, nu: usize, delta: usize) -> Vec<HStructure> {
    let mut out = Vec::new();
    if delta < 2 || g.max_degree() > delta {
        return out;
    }
    let comps = g.components_within(g.non_isolated());
    for (ci, &c) in comps.iter().enumerate() {
        let order = c.count_ones() as usize;
        if order < 3 || order % 2 == 0 || (order - 1) / 2 > nu {
            continue;
        }
        let block = g.induced_mask(c).graph;
        if !has_block_degrees(&block, delta) || !is_factor_critical_within(g, c) {
            continue;
        }
        let need_x = nu - (order - 1) / 2;
        let mut choices: Vec<Vec<(VertexSet, VertexSet)>> = Vec::new();
        let mut ok = true;
        for (cj, &comp) in comps.iter().enumerate() {
            if cj == ci {
                continue;
            }
            let Some(side) = g.bipartition_within(comp) else {
                ok = false;
                break;
            };
            let other = comp & !side;
            let comp_nu = matching_number_within(g, comp);
            let sides: Vec<(VertexSet, VertexSet)> = [(side, other), (other, side)]
                .into_iter()
                .filter(|&(x, _)| {
                    Bits(x).all(|v| g.degree(v) == delta) && x.count_ones() as usize == comp_nu
                })
                .collect();
            if sides.is_empty() {
                ok = false;
                break;
            }
            choices.push(sides);
        }
        if !ok {
            continue;
        }
        let mut partial = vec![(0 as VertexSet, 0 as VertexSet)];
        for opts in &choices {
            partial = partial
                .iter()
                .flat_map(|&(x, y)| opts.iter().map(move |&(ox, oy)| (x | ox, y | oy)))
                .collect();
        }
        for (x, y) in partial {
            if x.count_ones() as usize == need_x {
                out.push(HStructure { c, x, y });
            }
        }
    }
    out.sort_by_key(|s| (s.c, s.x, s.y));
    out.dedup();
    out
}

pub fn is_member_h(g: &Graph, nu: usize, delta: usize) -> bool {
    !h_structures(g, nu, delta).is_empty()
}

/// Whether `g` is `(H - uv) + uv'` for some `H ∈ H_{ν,Δ}` (odd Δ).
pub fn is_gamma_member(g: &Graph, nu: usize, delta: usize) -> bool {
    if delta % 2 == 0 {
        return false;
    }
    let h = g.strip_isolated().graph;
    let base_n = h.n();
    for e in h.edges() {
        for (u, v_prime) in [(e.u, e.v), (e.v, e.u)] {
            let mut base = h.padded(base_n + 1);
            base.delete_edge(u, v_prime);
            let candidates = base.vertex_mask() & !base.neighbors(u) & !bit(u) & !bit(v_prime);
            for w in Bits(candidates) {
                let mut cand = base.clone();
                cand.insert_edge(u, w);
                let found = h_structures(&cand, nu, delta).iter().any(|s| {
                    contains(s.c, v_prime)
                        && cand.degree(v_prime) + 1 == delta
                        && contains(s.x, u)
                        && contains(s.y, w)
                });
                if found {
                    return true;
                }
            }
        }
    }
    false
}

/// `E_{ν,Δ}`: `H_{ν,Δ}` for even Δ, `H_{ν,Δ}` plus all `Γ` variants for odd Δ.
pub fn is_member_e(g: &Graph, nu: usize, delta: usize) -> bool {
    is_member_h(g, nu, delta) || (delta % 2 == 1 && is_gamma_member(g, nu, delta))
}

/// `D_k` membership (up to isolated vertices).
pub fn is_member_d(g: &Graph, k: usize) -> bool {
    if k % 2 == 1 || k < 4 {
        return false;
    }
    let comps = g.components_within(g.non_isolated());
    if comps.len() != 2 {
        return false;
    }
    let sizes: Vec<usize> = comps.iter().map(|c| c.count_ones() as usize).collect();
    let (clique, block) = match sizes.as_slice() {
        [a, b] if *a == k - 1 && *b == k + 1 => (comps[0], comps[1]),
        [a, b] if *a == k + 1 && *b == k - 1 => (comps[1], comps[0]),
        _ => return false,
    };
    let clique_graph = g.induced_mask(clique).graph;
    let block_graph = g.induced_mask(block).graph;
    clique_graph == complete(k - 1)
        && block_graph.is_nearly_regular(k - 1)
        && is_factor_critical_within(g, block)
}

/// Bipartite graphs `G(X, Y)` with `|X| = x`, every `X` vertex of degree
/// `delta`, every `Y` vertex of degree in `1..=delta` and at most `max_y` `Y`
/// vertices. Vertices `0..x` are `X`. Each multiset of `X` neighborhoods is
/// produced once; relabelings of `Y` are not merged, so side-preserving
/// isomorphism classes may repeat.
fn bipartite_parts(x: usize, delta: usize, max_y: usize) -> Vec<Graph> {
    fn rec(x: usize, delta: usize, y_count: usize, rows: &mut Vec<VertexSet>, out: &mut Vec<Graph>) {
        if rows.len() == x {
            let used = rows.iter().fold(0, |a, r| a | r);
            if used.count_ones() as usize == y_count {
                let mut g = Graph::empty(x + y_count);
                for (i, r) in rows.iter().enumerate() {
                    for y in Bits(*r) {
                        g.insert_edge(i, x + y);
                    }
                }
                out.push(g);
            }
            return;
        }
        let mut combo: Vec<usize> = (0..delta).collect();
        loop {
            let row = crate::bits::set_of(&combo);
            let loads_ok = Bits(row).all(|y| rows.iter().filter(|r| contains(**r, y)).count() < delta);
            if loads_ok && rows.last().is_none_or(|&last| row >= last) {
                rows.push(row);
                rec(x, delta, y_count, rows, out);
                rows.pop();
            }
            if !crate::matching::next_combination(&mut combo, y_count) {
                break;
            }
        }
    }
    let mut out = Vec::new();
    for y_count in delta..=max_y.min(x * delta) {
        rec(x, delta, y_count, &mut Vec::with_capacity(x), &mut out);
    }
    out
}

/// Every member of `E_{ν,Δ}` with at most `max_vertices` non-isolated
/// vertices, one per isomorphism class, sorted by canonical form.
pub fn e_family_members(nu: usize, delta: usize, max_vertices: usize) -> Vec<Graph> {
    let mut out: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for c_order in (3..=2 * nu + 1).step_by(2) {
        if c_order > max_vertices {
            break;
        }
        let x = nu - (c_order - 1) / 2;
        let blocks = block_classes(delta, c_order);
        let parts = if x == 0 { vec![Graph::empty(0)] } else { bipartite_parts(x, delta, max_vertices - c_order) };
        for block in &blocks {
            for part in &parts {
                if c_order + part.n() > max_vertices {
                    continue;
                }
                let h = block.union(part);
                out.entry(canonical_form(&h)).or_insert_with(|| h.clone());
                if delta % 2 == 1 {
                    let v_prime = deficient_vertex(&h, crate::bits::low_mask(c_order), delta)
                        .expect("nearly regular block has a deficient vertex");
                    for u in c_order..c_order + x {
                        for v in h.neighbor_iter(u) {
                            let mut g = h.clone();
                            g.delete_edge(u, v);
                            g.insert_edge(u, v_prime);
                            if g.non_isolated().count_ones() as usize <= max_vertices {
                                out.entry(canonical_form(&g)).or_insert(g);
                            }
                        }
                    }
                }
            }
        }
    }
    out.into_values().collect()
}

/// Every member of `D_k` (one per isomorphism class).
pub fn d_family_members(k: usize) -> Vec<Graph> {
    if k % 2 == 1 || k < 4 {
        return Vec::new();
    }
    block_classes(k - 1, k + 1).iter().map(|c| complete(k - 1).union(c)).collect()
}
