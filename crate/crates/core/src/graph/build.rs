use super::{Graph, MAX_VERTICES};
use crate::bits::{bit, low_mask};
use crate::error::{invalid, Result};

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    assert!(n <= MAX_VERTICES);
    let all = low_mask(n);
    Graph::from_adjacency((0..n).map(|v| all & !bit(v)).collect())
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.insert_edge(v - 1, v);
    }
    g
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return invalid(format!("cycle needs at least 3 vertices, got {n}"));
    }
    let mut g = path(n);
    g.insert_edge(0, n - 1);
    Ok(g)
}

/// Star `K_{1,s}` with center 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.insert_edge(0, v);
    }
    g
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::empty(a).join(&Graph::empty(b))
}

/// Turán graph `T_{n,p}`: complete `p`-partite with balanced parts.
///
/// Parts are contiguous index blocks; the `n mod p` larger parts come first,
/// so vertices `0..ceil(n/p)` always form a largest part.
pub fn turan(n: usize, p: usize) -> Result<Graph> {
    if p == 0 || p > n {
        return invalid(format!("turan needs 1 <= p <= n, got n={n}, p={p}"));
    }
    if n > MAX_VERTICES {
        return invalid(format!("{n} vertices exceeds the supported maximum {MAX_VERTICES}"));
    }
    let mut part_of = Vec::with_capacity(n);
    let (q, rem) = (n / p, n % p);
    for part in 0..p {
        let size = q + usize::from(part < rem);
        part_of.extend(std::iter::repeat(part).take(size));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Friendship graph `F_k`: center 0 and triangles `{0, 2i+1, 2i+2}`.
pub fn friendship(k: usize) -> Result<Graph> {
    if k == 0 {
        return invalid("friendship graph needs k >= 1");
    }
    if 2 * k + 1 > MAX_VERTICES {
        return invalid(format!("F_{k} exceeds {MAX_VERTICES} vertices"));
    }
    let mut g = Graph::empty(2 * k + 1);
    for i in 0..k {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        g.insert_edge(0, a);
        g.insert_edge(0, b);
        g.insert_edge(a, b);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_edge_counts() {
        assert_eq!(complete(0).edge_count(), 0);
        assert_eq!(complete(1).edge_count(), 0);
        assert_eq!(complete(5).edge_count(), 10);
    }

    #[test]
    fn turan_edge_counts() {
        assert_eq!(turan(6, 2).unwrap().edge_count(), 9);
        assert_eq!(turan(5, 2).unwrap().edge_count(), 6);
        for n in 1..9 {
            assert_eq!(turan(n, n).unwrap(), complete(n));
            assert_eq!(turan(n, 2.min(n)).unwrap().edge_count(), if n >= 2 { n * n / 4 } else { 0 });
        }
        assert!(turan(4, 0).is_err());
        assert!(turan(3, 4).is_err());
    }

    #[test]
    fn turan_parts_are_balanced() {
        let g = turan(7, 3).unwrap();
        // parts {0,1,2}, {3,4}, {5,6}
        assert!(!g.has_edge(0, 2) && !g.has_edge(3, 4) && !g.has_edge(5, 6));
        assert!(g.has_edge(2, 3) && g.has_edge(4, 5));
        assert_eq!(g.edge_count(), 16);
    }

    #[test]
    fn friendship_shape() {
        assert_eq!(friendship(1).unwrap(), complete(3));
        let f2 = friendship(2).unwrap();
        assert_eq!((f2.n(), f2.edge_count()), (5, 6));
        for k in 1..8 {
            let f = friendship(k).unwrap();
            assert_eq!(f.max_degree(), 2 * k);
            assert_eq!(f.edge_count(), 3 * k);
        }
        assert!(friendship(0).is_err());
    }

    #[test]
    fn handshake_identity() {
        for g in [complete(7), turan(9, 4).unwrap(), friendship(4).unwrap(), star(5), path(6)] {
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        }
    }
}
