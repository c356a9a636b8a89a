use arlab_core::graph::{enumerate_graphs, io, Constraints, Graph};
use arlab_core::matching::{
    gallai_edmonds, has_perfect_matching, is_factor_critical, matching_number, maximum_matching,
    near_perfect_matching, tutte_violator, verify_ge,
};
use arlab_core::oracles::{nearly_regular_factor_critical_classes, vertex_edge_deletion_failures};
use proptest::prelude::*;

fn all_classes(max_vertices: usize) -> Vec<Graph> {
    enumerate_graphs(max_vertices, &Constraints::default()).graphs
}

fn brute_matching_number(g: &Graph, alive: u128) -> usize {
    let Some(u) = (0..g.n()).find(|&u| alive >> u & 1 == 1) else {
        return 0;
    };
    let rest = alive & !(1u128 << u);
    let mut best = brute_matching_number(g, rest);
    for v in 0..g.n() {
        if rest >> v & 1 == 1 && g.has_edge(u, v) {
            best = best.max(1 + brute_matching_number(g, rest & !(1u128 << v)));
        }
    }
    best
}

fn odd_components_without(g: &Graph, t: &[usize]) -> usize {
    g.odd_components(t).unwrap()
}

#[test]
fn matching_matches_brute_force_on_eight_vertices() {
    for g in all_classes(8) {
        let m = maximum_matching(&g);
        assert!(m.is_valid_in(&g));
        assert_eq!(m.len(), brute_matching_number(&g, g.vertex_mask()), "{}", io::to_graph6(&g));
    }
}

#[test]
fn deleting_a_vertex_costs_at_most_one() {
    for g in all_classes(7) {
        let nu = matching_number(&g);
        for v in 0..g.n() {
            let h = g.remove_vertices(&[v]).unwrap().graph;
            let d = matching_number(&h);
            assert!(d == nu || d + 1 == nu);
        }
    }
}

#[test]
fn tutte_violator_iff_no_perfect_matching() {
    for g in all_classes(8) {
        for n in (g.n()..=8).filter(|n| n % 2 == 0 && *n > 0) {
            let h = g.padded(n);
            match tutte_violator(&h) {
                Some(t) => {
                    assert!(!has_perfect_matching(&h));
                    assert!(odd_components_without(&h, &t) > t.len(), "{}", io::to_graph6(&h));
                }
                None => assert!(has_perfect_matching(&h), "{}", io::to_graph6(&h)),
            }
        }
    }
}

#[test]
fn gallai_edmonds_with_isolated_vertices() {
    for g in all_classes(6) {
        let h = g.padded(g.n() + 1);
        assert!(verify_ge(&h, &gallai_edmonds(&h)), "{}", io::to_graph6(&h));
    }
}

#[test]
fn near_perfect_matchings_of_factor_critical_graphs() {
    for g in all_classes(7).into_iter().filter(is_factor_critical) {
        for v in 0..g.n() {
            let m = near_perfect_matching(&g, Some(v)).unwrap();
            assert_eq!(m.len(), (g.n() - 1) / 2);
            assert_eq!(m.covered() >> v & 1, 0);
        }
    }
}

#[test]
fn nearly_five_regular_graphs_survive_vertex_and_edge_deletion() {
    for order in [7, 9] {
        let classes = nearly_regular_factor_critical_classes(5, order);
        assert!(!classes.is_empty());
        for g in &classes {
            assert!(g.is_nearly_regular(5) && is_factor_critical(g));
            assert!(vertex_edge_deletion_failures(g).is_empty(), "{}", io::to_graph6(g));
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.3), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.insert_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matching_is_valid_and_maximum(g in arb_graph(14)) {
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        prop_assert_eq!(m.len(), brute_matching_number(&g, g.vertex_mask()));
    }

    #[test]
    fn gallai_edmonds_verifies(g in arb_graph(10)) {
        prop_assert!(verify_ge(&g, &gallai_edmonds(&g)));
    }
}
