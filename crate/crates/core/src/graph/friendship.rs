use super::Graph;
use crate::matching::maximum_matching_within;
use serde::{Deserialize, Serialize};

/// A copy of `F_k`: a center and `k` disjoint pairs of its neighbors, each pair adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriendshipEmbedding {
    pub center: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl FriendshipEmbedding {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = crate::bits::bit(self.center);
        for &(a, b) in &self.pairs {
            for x in [a, b] {
                if x >= g.n() || crate::bits::contains(used, x) || !g.has_edge(self.center, x) {
                    return false;
                }
                used |= crate::bits::bit(x);
            }
            if !g.has_edge(a, b) {
                return false;
            }
        }
        true
    }
}

/// Finds a copy of `F_k` in `g`, if any.
///
/// `F_k` centered at `v` exists iff `ν(G[N(v)]) >= k`, so each center costs one
/// maximum matching computation. Centers are tried in increasing order.
pub fn contains_friendship(g: &Graph, k: usize) -> Option<FriendshipEmbedding> {
    assert!(k >= 1, "F_k needs k >= 1");
    (0..g.n())
        .filter(|&v| g.degree(v) >= 2 * k)
        .find_map(|v| {
            let m = maximum_matching_within(g, g.neighbors(v));
            (m.len() >= k).then(|| FriendshipEmbedding {
                center: v,
                pairs: m.edges()[..k].iter().map(|e| (e.u, e.v)).collect(),
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, friendship, turan};

    #[test]
    fn finds_itself() {
        let f3 = friendship(3).unwrap();
        let emb = contains_friendship(&f3, 3).unwrap();
        assert_eq!(emb.center, 0);
        assert!(emb.is_valid_in(&f3));
        assert!(contains_friendship(&f3, 4).is_none());
    }

    #[test]
    fn bipartite_graphs_have_no_triangle() {
        assert!(contains_friendship(&turan(10, 2).unwrap(), 1).is_none());
    }

    #[test]
    fn complete_graph_capacity() {
        assert!(contains_friendship(&complete(7), 3).is_some());
        assert!(contains_friendship(&complete(6), 3).is_none());
    }
}
