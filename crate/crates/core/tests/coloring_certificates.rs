use arlab_core::catalog::{ar_star_matching, ex_friendship};
use arlab_core::colorings::{
    coloring_clique_plus_c, coloring_k2_star, coloring_lower_friendship, coloring_two_cliques, colors_used,
    representative_rainbow_subgraph, EdgeColoring, TieBreak,
};
use arlab_core::rainbow::{find_rainbow_in_family, PatternSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn star_matching_coloring(n: usize, k: usize) -> EdgeColoring {
    match k {
        2 => coloring_k2_star(n).unwrap(),
        k if k % 2 == 1 => coloring_two_cliques(n, k).unwrap(),
        k => coloring_clique_plus_c(n, k).unwrap(),
    }
}

#[test]
fn star_matching_certificates_up_to_five() {
    for k in 2..=5usize {
        let n = 3 * k * k;
        let c = star_matching_coloring(n, k);
        assert_eq!(colors_used(&c) as u64 + 1, ar_star_matching(n as u64, k as u64).unwrap().value);
        let family = [PatternSpec::Star(k + 1), PatternSpec::Matching(k + 1)];
        assert!(find_rainbow_in_family(&c, &family).is_none(), "k = {k}");
        assert!(find_rainbow_in_family(&c, &[PatternSpec::Matching(k)]).is_some());
    }
}

#[test]
fn friendship_certificates() {
    for n in [10usize, 20, 30] {
        for k in [1usize, 2] {
            let c = coloring_lower_friendship(n, k).unwrap();
            let ex = if k == 1 { (n * n / 4) as u64 } else { ex_friendship(n as u64, k as u64).unwrap().value };
            assert_eq!(colors_used(&c) as u64, ex + 1);
            assert!(find_rainbow_in_family(&c, &[PatternSpec::Friendship(k + 1)]).is_none(), "n = {n}, k = {k}");
            assert!(find_rainbow_in_family(&c, &[PatternSpec::Friendship(k)]).is_some());
        }
    }
}

#[test]
fn representatives_are_rainbow() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(2..=9);
        let palette = rng.gen_range(1..=n * (n - 1) / 2) as u64;
        let c = EdgeColoring::from_fn(n, |_, _| rng.gen_range(0..palette));
        for pick in [TieBreak::LexSmallest, TieBreak::LexLargest] {
            let g = representative_rainbow_subgraph(&c, pick);
            assert_eq!(g.edge_count(), c.r());
            let mut colors: Vec<u32> = g.edges().iter().map(|e| c.color(e.u, e.v)).collect();
            colors.sort_unstable();
            colors.dedup();
            assert_eq!(colors.len(), c.r());
        }
    }
}
