//! Brute-force ground truth on small instances.
//!
//! Each oracle returns an [`OracleReport`] carrying its parameters, the caps
//! it ran under, the computed value, re-verified witnesses and work counters.
//! A run that hits a cap says so in its status and never reports a value it
//! has not established.

use crate::bits::bit;
use crate::catalog::{ar_friendship, ar_star_matching, block_classes, f_formula};
use crate::colorings::{self, EdgeColoring};
use crate::graph::{
    contains_friendship, enumerate_graphs, for_each_graph, io, Constraints, ForbiddenPattern, Graph,
};
use crate::matching::{has_perfect_matching_within, matching_number};
use crate::rainbow::{find_rainbow_in_family, PatternSpec};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

pub const SCHEMA: &str = "v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The value is exact.
    Complete,
    /// A resource cap stopped the run; `value` is absent or only a bound.
    Capped,
    /// The search range was exhausted without reaching the target (for
    /// `ar`: every level up to `r_hi` had a rainbow-free partition).
    RangeExhausted,
}

/// A witness object attached to a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Graph { graph6: String, edges: usize },
    Coloring { n: usize, r: usize, colors: Vec<u32> },
    Violation { graph6: String, detail: String },
}

impl Witness {
    fn graph(g: &Graph) -> Self {
        Witness::Graph { graph6: io::to_graph6(g), edges: g.edge_count() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub schema: String,
    pub oracle: String,
    pub params: Map<String, Value>,
    pub caps: BTreeMap<String, u64>,
    pub status: Status,
    pub value: Option<u64>,
    pub witnesses: Vec<Witness>,
    pub counts: BTreeMap<String, u64>,
    pub notes: Vec<String>,
}

impl OracleReport {
    fn new(oracle: &str, params: Value) -> Self {
        OracleReport {
            schema: SCHEMA.to_string(),
            oracle: oracle.to_string(),
            params: params.as_object().cloned().unwrap_or_default(),
            caps: BTreeMap::new(),
            status: Status::Complete,
            value: None,
            witnesses: Vec::new(),
            counts: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub const CSV_HEADER: &'static str = "schema,oracle,params,caps,status,value,witnesses";

    /// One CSV row matching [`Self::CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        let join = |pairs: Vec<String>| pairs.join(";");
        let params = join(self.params.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect());
        let caps = join(self.caps.iter().map(|(k, v)| format!("{k}={v}")).collect());
        let status = serde_json::to_value(self.status).expect("status serializes");
        format!(
            "{},{},{},{},{},{},{}",
            self.schema,
            self.oracle,
            params,
            caps,
            plain(&status),
            self.value.map(|v| v.to_string()).unwrap_or_default(),
            self.witnesses.len()
        )
    }

    pub fn witness_graphs(&self) -> Vec<Graph> {
        self.witnesses
            .iter()
            .filter_map(|w| match w {
                Witness::Graph { graph6, .. } => io::from_graph6(graph6).ok(),
                _ => None,
            })
            .collect()
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Forbidden pattern for the Turán oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TuranPattern {
    Triangle,
    Friendship(usize),
}

impl TuranPattern {
    fn triangles(self) -> usize {
        match self {
            TuranPattern::Triangle => 1,
            TuranPattern::Friendship(k) => k,
        }
    }

    fn label(self) -> String {
        match self {
            TuranPattern::Triangle => "K3".into(),
            TuranPattern::Friendship(k) => format!("F{k}"),
        }
    }
}

/// `ex(n, K_3)` or `ex(n, F_k)` with every extremal class, by enumerating all
/// pattern-free classes on at most `n` vertices.
pub fn oracle_ex(n: usize, pattern: TuranPattern, max_classes: Option<usize>) -> OracleReport {
    let mut report = OracleReport::new("ex", json!({ "n": n, "pattern": pattern.label() }));
    if let Some(cap) = max_classes {
        report.caps.insert("classes".into(), cap as u64);
    }
    let forbidden = match pattern {
        TuranPattern::Triangle => ForbiddenPattern::Triangle,
        TuranPattern::Friendship(k) => ForbiddenPattern::Friendship(k),
    };
    let c = Constraints { forbidden: Some(forbidden), max_classes, ..Default::default() };
    let run = enumerate_graphs(n, &c);
    let best = run.graphs.iter().map(Graph::edge_count).max().unwrap_or(0);
    let extremal: Vec<&Graph> = run.graphs.iter().filter(|g| g.edge_count() == best).collect();
    for g in &extremal {
        assert!(
            g.n() <= n && contains_friendship(g, pattern.triangles()).is_none(),
            "extremal witness contains the forbidden pattern"
        );
        report.witnesses.push(Witness::graph(g));
    }
    report.counts.insert("classes".into(), run.classes_generated);
    report.counts.insert("children".into(), run.children_examined);
    report.counts.insert("extremal_classes".into(), extremal.len() as u64);
    if run.complete {
        report.value = Some(best as u64);
    } else {
        report.status = Status::Capped;
        report.notes.push(format!("stopped early; best seen {best} is only a lower bound"));
    }
    report
}

/// Sufficient vertex cap for `f(ν, Δ)`: the vertices of a maximum matching
/// (at most `2ν`) together with their neighbors (at most `Δ` each) cover
/// every non-isolated vertex, because every edge meets the matching.
pub fn f_vertex_bound(nu: usize, delta: usize) -> usize {
    2 * nu * (delta + 1)
}

fn f_classes(nu: usize, delta: usize, cap: usize, exact: Option<usize>) -> crate::graph::Enumeration {
    let c = Constraints { max_degree: Some(delta), max_matching: Some(nu), exact_edges: exact, ..Default::default() };
    enumerate_graphs(cap, &c)
}

/// `f(ν, Δ)` as the largest edge count among classes with `ν(G) <= ν`,
/// `Δ(G) <= Δ` and at most `cap` non-isolated vertices.
pub fn oracle_f(nu: usize, delta: usize, cap: usize) -> OracleReport {
    let mut report = OracleReport::new("f", json!({ "nu": nu, "delta": delta }));
    report.caps.insert("vertices".into(), cap as u64);
    let run = f_classes(nu, delta, cap, None);
    let best = run.graphs.iter().map(Graph::edge_count).max().unwrap_or(0);
    for g in run.graphs.iter().filter(|g| g.edge_count() == best) {
        assert!(matching_number(g) <= nu && g.max_degree() <= delta && g.n() <= cap);
        report.witnesses.push(Witness::graph(g));
    }
    report.counts.insert("classes".into(), run.classes_generated);
    report.counts.insert("extremal_classes".into(), report.witnesses.len() as u64);
    report.value = Some(best as u64);
    if cap < f_vertex_bound(nu, delta) {
        report.status = Status::Capped;
        report.notes.push(format!("cap {cap} is below 2ν(Δ+1) = {}; value is a lower bound", f_vertex_bound(nu, delta)));
    }
    report
}

/// All classes with `ν(G) <= ν`, `Δ(G) <= Δ` and exactly `f(ν, Δ)` edges on
/// at most `cap` non-isolated vertices, sorted by canonical form.
pub fn enumerate_extremal_f(nu: usize, delta: usize, cap: usize) -> Vec<Graph> {
    let Ok(f) = f_formula(nu as u64, delta as u64) else {
        return Vec::new();
    };
    f_classes(nu, delta, cap, Some(f as usize)).graphs
}

/// Report form of [`enumerate_extremal_f`].
pub fn oracle_extremal_set(nu: usize, delta: usize, cap: usize) -> OracleReport {
    let mut report = OracleReport::new("extremal-set", json!({ "nu": nu, "delta": delta }));
    report.caps.insert("vertices".into(), cap as u64);
    let classes = enumerate_extremal_f(nu, delta, cap);
    report.value = Some(classes.len() as u64);
    report.witnesses = classes.iter().map(Witness::graph).collect();
    if cap < f_vertex_bound(nu, delta) {
        report.status = Status::Capped;
        report.notes.push(format!("only classes with at most {cap} vertices are listed"));
    }
    report
}

/// Calls `visit` with every restricted-growth string of length `m` using
/// exactly `r` blocks, in lexicographic order, until it returns `false`.
/// Returns `false` if stopped early.
pub fn for_each_partition(m: usize, r: usize, mut visit: impl FnMut(&[u32]) -> bool) -> bool {
    fn rec(a: &mut Vec<u32>, m: usize, r: usize, blocks: usize, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        let i = a.len();
        if i == m {
            return blocks < r || visit(a);
        }
        if m - i < r.saturating_sub(blocks) {
            return true;
        }
        for b in 0..=blocks.min(r - 1) {
            a.push(b as u32 + 1);
            let ok = rec(a, m, r, blocks.max(b + 1), visit);
            a.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if r == 0 || r > m {
        return true;
    }
    rec(&mut Vec::with_capacity(m), m, r, 0, &mut visit)
}

/// `ar(n, family)`: the least `r` in `r_lo..=r_hi` such that every partition
/// of `E(K_n)` into exactly `r` classes has a rainbow member of `family`.
///
/// A level fails as soon as a rainbow-free partition is found; the first one
/// in lexicographic order is kept as the witness for `ar > r`.
pub fn oracle_ar(n: usize, family: &[PatternSpec], r_lo: usize, r_hi: usize, max_partitions: Option<u64>) -> OracleReport {
    let names: Vec<String> = family.iter().map(ToString::to_string).collect();
    let mut report =
        OracleReport::new("ar", json!({ "n": n, "family": names.join(";"), "r_lo": r_lo, "r_hi": r_hi }));
    if let Some(cap) = max_partitions {
        report.caps.insert("partitions".into(), cap);
    }
    let m = n * n.saturating_sub(1) / 2;
    let mut examined = 0u64;
    let mut last_free: Option<EdgeColoring> = None;
    for r in r_lo.max(1)..=r_hi {
        if r > m {
            report.notes.push(format!("K_{n} has only {m} edges; no exact {r}-coloring exists"));
            break;
        }
        let mut free = None;
        let mut capped = false;
        let before = examined;
        for_each_partition(m, r, |rgs| {
            if max_partitions.is_some_and(|cap| examined >= cap) {
                capped = true;
                return false;
            }
            examined += 1;
            let colors: Vec<u64> = rgs.iter().map(|&c| c as u64).collect();
            let c = EdgeColoring::from_edge_colors(n, &colors).expect("length matches");
            if find_rainbow_in_family(&c, family).is_none() {
                free = Some(c);
                return false;
            }
            true
        });
        report.counts.insert(format!("partitions_r{r}"), examined - before);
        if capped {
            report.status = Status::Capped;
            report.notes.push(format!("partition cap hit while checking r = {r}"));
            break;
        }
        match free {
            Some(c) => last_free = Some(c),
            None => {
                report.value = Some(r as u64);
                break;
            }
        }
    }
    if let Some(c) = &last_free {
        assert!(find_rainbow_in_family(c, family).is_none(), "witness must be rainbow-free");
        report.witnesses.push(Witness::Coloring { n, r: c.r(), colors: c.edge_colors() });
    }
    if report.value.is_none() && report.status == Status::Complete {
        report.status = Status::RangeExhausted;
        report.notes.push(format!("ar > {r_hi}"));
    }
    report.counts.insert("partitions".into(), examined);
    if let Some(note) = closed_form_note(n, family) {
        report.notes.push(note);
    }
    report
}

/// Compares against the closed form when the family is `{K_{1,k+1}, (k+1)K_2}`
/// or `{F_{k+1}}`, labelling `n` inside or outside the proven range.
fn closed_form_note(n: usize, family: &[PatternSpec]) -> Option<String> {
    let mut sorted = family.to_vec();
    sorted.sort();
    sorted.dedup();
    let value = match sorted.as_slice() {
        [PatternSpec::Star(a), PatternSpec::Matching(b)] if a == b && *a >= 3 => {
            ar_star_matching(n as u64, *a as u64 - 1).ok()?
        }
        [PatternSpec::Friendship(s)] if *s >= 2 => ar_friendship(n as u64, *s as u64 - 1).ok()?,
        _ => return None,
    };
    let range = if value.in_proven_range { "inside theorem range" } else { "outside theorem range" };
    Some(format!("closed form gives {} ({range})", value.value))
}

/// The rainbow-free witness of an `ar` report, if any.
pub fn ar_witness(report: &OracleReport) -> Option<EdgeColoring> {
    report.witnesses.iter().find_map(|w| match w {
        Witness::Coloring { n, colors, .. } => {
            let raw: Vec<u64> = colors.iter().map(|&c| c as u64).collect();
            EdgeColoring::from_edge_colors(*n, &raw).ok()
        }
        _ => None,
    })
}

/// Checks `e(G) <= ⌊n²/4⌋ + kΔ(G)` for every `F_{k+1}`-free class on at most
/// `n_max` vertices, taking `n` as the number of non-isolated vertices (the
/// bound only grows with `n`).
pub fn check_lemma_aa(n_max: usize, k: usize) -> OracleReport {
    let mut report = OracleReport::new("lemma-aa", json!({ "n_max": n_max, "k": k }));
    let c = Constraints { forbidden: Some(ForbiddenPattern::Friendship(k + 1)), ..Default::default() };
    let mut checked = 0u64;
    let mut tight = 0u64;
    let mut violations = Vec::new();
    let run = for_each_graph(n_max, &c, |g| {
        checked += 1;
        let n = g.n();
        let bound = n * n / 4 + k * g.max_degree();
        if g.edge_count() > bound {
            violations.push(Witness::Violation {
                graph6: io::to_graph6(g),
                detail: format!("e = {} > {bound}", g.edge_count()),
            });
        } else if g.edge_count() == bound {
            tight += 1;
        }
    });
    report.counts.insert("classes".into(), checked);
    report.counts.insert("tight".into(), tight);
    report.counts.insert("children".into(), run.children_examined);
    report.value = Some(violations.len() as u64);
    report.witnesses = violations;
    report
}

/// Nearly `r`-regular factor-critical classes of the given odd order.
pub fn nearly_regular_factor_critical_classes(r: usize, order: usize) -> Vec<Graph> {
    block_classes(r, order)
}

/// For every vertex `v` and edge `e` of `G - v`, whether `G - v - e` has a
/// perfect matching. Returns the failing pairs.
pub fn vertex_edge_deletion_failures(g: &Graph) -> Vec<(usize, crate::graph::Edge)> {
    let mut failures = Vec::new();
    for v in 0..g.n() {
        let keep = g.vertex_mask() & !bit(v);
        for e in g.edges().into_iter().filter(|e| !e.touches(v)) {
            let mut h = g.clone();
            h.delete_edge(e.u, e.v);
            if !has_perfect_matching_within(&h, keep) {
                failures.push((v, e));
            }
        }
    }
    failures
}

/// Runs the vertex-plus-edge deletion check over every nearly
/// `r`-regular factor-critical graph of each listed order.
pub fn check_vertex_edge_deletion(r: usize, orders: &[usize]) -> OracleReport {
    let mut report = OracleReport::new("vertex-edge-deletion", json!({ "r": r, "orders": orders }));
    let mut graphs = 0u64;
    let mut pairs = 0u64;
    for &order in orders {
        let classes = nearly_regular_factor_critical_classes(r, order);
        report.counts.insert(format!("classes_order{order}"), classes.len() as u64);
        for g in &classes {
            graphs += 1;
            pairs += (g.n() * g.edge_count()) as u64;
            for (v, e) in vertex_edge_deletion_failures(g) {
                report.witnesses.push(Witness::Violation {
                    graph6: io::to_graph6(g),
                    detail: format!("G - {v} - {}{} has no perfect matching", e.u, e.v),
                });
            }
        }
    }
    report.counts.insert("graphs".into(), graphs);
    report.counts.insert("vertex_edge_pairs".into(), pairs);
    report.value = Some(report.witnesses.len() as u64);
    if graphs == 0 {
        report.notes.push("no graphs to check".into());
    }
    report
}

/// Color count and rainbow-freeness of a lower-bound construction.
pub fn certify_rainbow_free(c: &EdgeColoring, family: &[PatternSpec]) -> OracleReport {
    let names: Vec<String> = family.iter().map(ToString::to_string).collect();
    let mut report = OracleReport::new("rainbow-free", json!({ "n": c.n(), "r": c.r(), "family": names.join(";") }));
    match find_rainbow_in_family(c, family) {
        None => report.value = Some(1),
        Some(e) => {
            report.value = Some(0);
            report.notes.push(serde_json::to_string(&e).expect("embedding serializes"));
        }
    }
    report.counts.insert("colors".into(), colorings::colors_used(c) as u64);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{ex_friendship, ex_mantel, is_member_d, is_member_e};
    use crate::graph::{canonical_form, complete};

    fn bell(m: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 0..m {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn partitions_are_counted_by_stirling_numbers() {
        let mut total = 0;
        for r in 1..=6 {
            let mut prev: Option<Vec<u32>> = None;
            for_each_partition(6, r, |a| {
                assert_eq!(*a.iter().max().unwrap() as usize, r);
                assert!(prev.as_deref().is_none_or(|p| p < a));
                prev = Some(a.to_vec());
                total += 1;
                true
            });
        }
        assert_eq!(total, bell(6));
        assert_eq!(bell(10), 115_975);
        let mut s_10_8 = 0;
        for_each_partition(10, 8, |_| {
            s_10_8 += 1;
            true
        });
        assert_eq!(s_10_8, 750);
    }

    #[test]
    fn ex_values() {
        assert_eq!(oracle_ex(5, TuranPattern::Triangle, None).value, Some(6));
        assert_eq!(oracle_ex(5, TuranPattern::Friendship(2), None).value, Some(7));
        assert_eq!(oracle_ex(7, TuranPattern::Friendship(2), None).value, Some(13));
        for n in 3..=7 {
            assert_eq!(oracle_ex(n, TuranPattern::Triangle, None).value, Some(ex_mantel(n as u64).unwrap()));
        }
        assert_eq!(
            oracle_ex(6, TuranPattern::Friendship(2), None).value,
            Some(ex_friendship(6, 2).unwrap().value)
        );
    }

    #[test]
    fn ex_cap_is_flagged() {
        let r = oracle_ex(6, TuranPattern::Triangle, Some(5));
        assert_eq!(r.status, Status::Capped);
        assert_eq!(r.value, None);
    }

    #[test]
    fn f_small_values() {
        assert_eq!(oracle_f(1, 1, 4).value, Some(1));
        let r = oracle_f(2, 2, f_vertex_bound(2, 2));
        assert_eq!(r.value, Some(6));
        assert_eq!(r.status, Status::Complete);
        assert_eq!(r.witness_graphs(), vec![crate::graph::canonical_form(&complete(3).union(&complete(3))).to_graph()]);
        assert_eq!(oracle_f(2, 3, 10).value, Some(7));
        assert_eq!(oracle_f(2, 2, 5).status, Status::Capped);
    }

    #[test]
    fn f_cap_doubling_changes_nothing() {
        let a = oracle_f(2, 2, f_vertex_bound(2, 2));
        let b = oracle_f(2, 2, 2 * f_vertex_bound(2, 2));
        assert_eq!(a.value, b.value);
        assert_eq!(a.witnesses, b.witnesses);
    }

    #[test]
    fn extremal_sets() {
        let k3 = enumerate_extremal_f(1, 2, 6);
        assert_eq!(k3.len(), 1);
        assert_eq!(canonical_form(&k3[0]), canonical_form(&complete(3)));
        let two = enumerate_extremal_f(2, 2, 10);
        assert_eq!(two.len(), 1);
        assert_eq!(canonical_form(&two[0]), canonical_form(&complete(3).union(&complete(3))));
        for g in enumerate_extremal_f(2, 3, 9) {
            assert!(is_member_e(&g, 2, 3), "{g:?}");
        }
        for g in enumerate_extremal_f(3, 3, 10) {
            assert!(is_member_e(&g, 3, 3) || is_member_d(&g, 4), "{g:?}");
        }
    }

    #[test]
    fn ar_small_values() {
        let r = oracle_ar(3, &[PatternSpec::Star(2)], 1, 3, None);
        assert_eq!(r.value, Some(2));
        assert!(r.notes.is_empty());
        let r = oracle_ar(5, &[PatternSpec::Friendship(2)], 7, 8, None);
        assert!(r.notes.contains(&"closed form gives 8 (inside theorem range)".to_string()));
        let r = oracle_ar(5, &[PatternSpec::Matching(3), PatternSpec::Star(3)], 1, 10, None);
        assert!(r.notes.iter().any(|n| n.ends_with("(outside theorem range)")));
        let r = oracle_ar(4, &[PatternSpec::Matching(2)], 1, 6, None);
        assert_eq!(r.value, Some(4));
        let w = ar_witness(&r).unwrap();
        assert_eq!(w.r(), 3);
        assert!(find_rainbow_in_family(&w, &[PatternSpec::Matching(2)]).is_none());
    }

    #[test]
    fn ar_range_and_cap() {
        let r = oracle_ar(4, &[PatternSpec::Matching(2)], 1, 3, None);
        assert_eq!(r.status, Status::RangeExhausted);
        assert_eq!(r.value, None);
        let r = oracle_ar(5, &[PatternSpec::Friendship(2)], 7, 8, Some(10));
        assert_eq!(r.status, Status::Capped);
        assert_eq!(r.value, None);
    }

    #[test]
    fn ar_witness_survives_relabeling() {
        let family = [PatternSpec::Matching(2)];
        let w = ar_witness(&oracle_ar(4, &family, 1, 6, None)).unwrap();
        for perm in [[1, 0, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1]] {
            assert!(find_rainbow_in_family(&w.permuted(&perm), &family).is_none());
        }
        let mut free = 0;
        let mut free_permuted = 0;
        for_each_partition(6, 3, |a| {
            let colors: Vec<u64> = a.iter().map(|&x| x as u64).collect();
            let c = EdgeColoring::from_edge_colors(4, &colors).unwrap();
            free += find_rainbow_in_family(&c, &family).is_none() as usize;
            free_permuted += find_rainbow_in_family(&c.permuted(&[2, 0, 3, 1]), &family).is_none() as usize;
            true
        });
        assert_eq!(free, free_permuted);
    }

    #[test]
    fn lemma_aa_small() {
        assert_eq!(check_lemma_aa(6, 1).value, Some(0));
        let t = crate::graph::turan(6, 2).unwrap();
        assert!(t.edge_count() <= 9 + t.max_degree());
    }

    #[test]
    fn vertex_edge_deletion_detects_failures() {
        let c5 = crate::graph::cycle(5).unwrap();
        assert!(!vertex_edge_deletion_failures(&c5).is_empty());
        let r = check_vertex_edge_deletion(5, &[7]);
        assert_eq!(r.value, Some(0));
        assert!(r.counts["graphs"] >= 1);
    }

    #[test]
    fn report_formats() {
        let r = oracle_f(1, 1, 4);
        assert!(r.to_json().contains("\"schema\": \"v1\""));
        assert_eq!(r.csv_row(), "v1,f,delta=1;nu=1,vertices=4,complete,1,1");
        let back: OracleReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
