//! Canonical forms up to isomorphism and isolated vertices.
//!
//! The canonical labeling is the one minimizing the relabeled adjacency rows
//! over all labelings compatible with equitable partition refinement. The
//! search individualizes vertices of the first non-singleton cell and skips
//! siblings that a known automorphism (fixing the current prefix) maps onto an
//! already explored sibling.

use super::Graph;
use crate::bits::{bit, Bits, VertexSet};
use std::fmt;

/// Byte string identifying an isomorphism class of graphs without isolated vertices.
///
/// Layout: one byte holding the number `k` of non-isolated vertices, then the
/// upper triangle of the canonical adjacency matrix, row by row, packed eight
/// bits per byte (most significant bit first).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of non-isolated vertices of the class.
    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonical representative (no isolated vertices).
    pub fn to_graph(&self) -> Graph {
        let k = self.order();
        let mut g = Graph::empty(k);
        let mut idx = 0usize;
        for i in 0..k {
            for j in i + 1..k {
                let byte = self.0[1 + idx / 8];
                if (byte >> (7 - idx % 8)) & 1 == 1 {
                    g.insert_edge(i, j);
                }
                idx += 1;
            }
        }
        g
    }

    fn from_rows(rows: &[VertexSet]) -> Self {
        let k = rows.len();
        let pairs = k * k.saturating_sub(1) / 2;
        let mut bytes = vec![0u8; 1 + pairs.div_ceil(8)];
        bytes[0] = k as u8;
        let mut idx = 0usize;
        for i in 0..k {
            for j in i + 1..k {
                if (rows[i] >> j) & 1 == 1 {
                    bytes[1 + idx / 8] |= 1 << (7 - idx % 8);
                }
                idx += 1;
            }
        }
        CanonicalForm(bytes)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Result of canonical labeling.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    pub form: CanonicalForm,
    /// `order[i]` is the vertex of the input graph that receives canonical label `i`.
    /// Only non-isolated vertices are labeled.
    pub order: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let stripped = g.strip_isolated();
    let h = &stripped.graph;
    let k = h.n();
    if k == 0 {
        return CanonicalLabeling { form: CanonicalForm(vec![0]), order: Vec::new() };
    }
    let adj: Vec<VertexSet> = (0..k).map(|v| h.neighbors(v)).collect();
    let mut search = Search { adj: &adj, best: None, autos: Vec::new() };
    let mut cells = vec![h.vertex_mask()];
    refine(&adj, &mut cells);
    search.descend(cells, &mut Vec::new());
    let (rows, labels) = search.best.expect("search visits at least one leaf");
    CanonicalLabeling {
        form: CanonicalForm::from_rows(&rows),
        order: labels.iter().map(|&v| stripped.original[v]).collect(),
    }
}

/// Splits cells by neighbor counts into each splitter cell until stable.
/// Sub-cells are ordered by increasing count, so the outcome depends only on
/// the ordered partition as a sequence of sets.
fn refine(adj: &[VertexSet], cells: &mut Vec<VertexSet>) {
    let mut scratch: Vec<(u32, usize)> = Vec::with_capacity(adj.len());
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 2);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                scratch.clear();
                scratch.extend(Bits(cell).map(|v| ((adj[v] & splitter).count_ones(), v)));
                scratch.sort_unstable();
                let mut current = 0;
                let mut last = scratch[0].0;
                for &(c, v) in &scratch {
                    if c != last {
                        next.push(current);
                        current = 0;
                        last = c;
                    }
                    current |= bit(v);
                }
                next.push(current);
            }
            if next.len() != cells.len() {
                changed = true;
                *cells = next;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Search<'a> {
    adj: &'a [VertexSet],
    best: Option<(Vec<VertexSet>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 256;

impl Search<'_> {
    fn descend(&mut self, cells: Vec<VertexSet>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(cell) {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let mut child = cells.clone();
            child[target] = cell & !bit(v);
            child.insert(target, bit(v));
            refine(self.adj, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, cells: &[VertexSet]) {
        let labels: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut position = vec![0usize; labels.len()];
        for (i, &v) in labels.iter().enumerate() {
            position[v] = i;
        }
        let rows: Vec<VertexSet> = labels
            .iter()
            .map(|&v| Bits(self.adj[v]).fold(0, |acc, w| acc | bit(position[w])))
            .collect();
        match &self.best {
            None => self.best = Some((rows, labels)),
            Some((best_rows, best_labels)) => match rows.cmp(best_rows) {
                std::cmp::Ordering::Less => self.best = Some((rows, labels)),
                std::cmp::Ordering::Equal => {
                    if self.autos.len() < MAX_STORED_AUTOMORPHISMS {
                        let mut gamma = vec![0usize; labels.len()];
                        for (i, &v) in labels.iter().enumerate() {
                            gamma[v] = best_labels[i];
                        }
                        self.autos.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Orbit test under the group generated by the stored automorphisms that
    /// fix `prefix` pointwise (a subgroup of the true stabilizer).
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, friendship, path, star, turan};

    #[test]
    fn relabeled_paths_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn isolated_vertices_are_ignored() {
        let k3 = complete(3);
        assert_eq!(canonical_form(&k3.padded(4)), canonical_form(&k3));
        let shifted = Graph::empty(2).union(&k3);
        assert_eq!(canonical_form(&shifted), canonical_form(&k3));
    }

    #[test]
    fn star_and_path_differ() {
        assert_ne!(canonical_form(&star(3)), canonical_form(&path(4)));
        assert_ne!(canonical_form(&cycle(6).unwrap()), canonical_form(&complete(3).union(&complete(3))));
    }

    #[test]
    fn round_trip_through_representative() {
        for g in [complete(6), turan(7, 3).unwrap(), friendship(3).unwrap(), complete_bipartite(3, 4)] {
            let form = canonical_form(&g);
            let rep = form.to_graph();
            assert_eq!(rep.edge_count(), g.edge_count());
            assert_eq!(canonical_form(&rep), form);
        }
    }

    #[test]
    fn labeling_maps_to_representative() {
        let g = friendship(2).unwrap().padded(7);
        let lab = canonical_labeling(&g);
        let rep = lab.form.to_graph();
        for e in rep.edges() {
            assert!(g.has_edge(lab.order[e.u], lab.order[e.v]));
        }
    }

    #[test]
    fn empty_graph_form() {
        assert_eq!(canonical_form(&Graph::empty(0)), canonical_form(&Graph::empty(5)));
        assert_eq!(canonical_form(&Graph::empty(3)).order(), 0);
    }
}
