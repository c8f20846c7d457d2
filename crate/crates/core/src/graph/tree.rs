use serde::Serialize;

use super::{paths::connected_components, Graph};
use crate::error::{Error, Result};

/// A spanning tree with edge cost `r_mn = -2 ln W_mn`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tree {
    pub edges: Vec<(usize, usize, f64)>,
    pub cost: f64,
}

/// Distance assigned to an edge of weight `w`.
pub fn log_distance(w: f64) -> f64 {
    -2.0 * w.ln()
}

struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

impl Tree {
    /// Validates that `edges` form a spanning tree of `g` and prices it.
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Tree> {
        let n = g.n();
        if edges.len() + 1 != n {
            return Err(Error::InvalidSize(format!(
                "a spanning tree on {n} vertices has {} edges",
                n - 1
            )));
        }
        let mut dsu = DisjointSet::new(n);
        let mut out = Vec::with_capacity(edges.len());
        for &(m, k) in edges {
            if m >= n || k >= n {
                return Err(Error::IndexOutOfRange { index: m.max(k), n });
            }
            let w = g.weight(m, k);
            if w <= 0.0 {
                return Err(Error::InvalidWeights(format!("({m}, {k}) is not an edge")));
            }
            if !dsu.union(m, k) {
                return Err(Error::InvalidWeights(format!(
                    "edge ({m}, {k}) closes a cycle"
                )));
            }
            out.push((m, k, w));
        }
        let cost = out.iter().map(|e| log_distance(e.2)).sum();
        Ok(Tree { edges: out, cost })
    }
}

/// Kruskal: sort edges by `-2 ln W`, merge components. Costs may be
/// negative when weights exceed 1.
pub fn minimum_spanning_tree(g: &Graph) -> Result<Tree> {
    if g.is_directed() {
        return Err(Error::Directed);
    }
    let components = connected_components(g);
    if components.len() > 1 {
        return Err(Error::Disconnected { components });
    }
    let mut candidates: Vec<(f64, usize, usize, f64)> = g
        .edges()
        .into_iter()
        .map(|(m, k, w)| (log_distance(w), m, k, w))
        .collect();
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then((a.1, a.2).cmp(&(b.1, b.2))));

    let mut dsu = DisjointSet::new(g.n());
    let mut edges = Vec::with_capacity(g.n().saturating_sub(1));
    let mut cost = 0.0;
    for (r, m, k, w) in candidates {
        if dsu.union(m, k) {
            edges.push((m, k, w));
            cost += r;
        }
    }
    Ok(Tree { edges, cost })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Topology;

    #[test]
    fn path_graph_is_its_own_tree() {
        let g = Graph::new(4, false, &[(0, 1, 0.3), (1, 2, 2.5), (2, 3, 0.9)]).unwrap();
        let t = minimum_spanning_tree(&g).unwrap();
        let mut got: Vec<_> = t.edges.iter().map(|e| (e.0, e.1)).collect();
        got.sort();
        assert_eq!(got, vec![(0, 1), (1, 2), (2, 3)]);
        let expect = log_distance(0.3) + log_distance(2.5) + log_distance(0.9);
        assert!((t.cost - expect).abs() < 1e-12);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, false, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        assert!(matches!(
            minimum_spanning_tree(&g),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn from_edges_rejects_cycles() {
        let g = Topology::Complete.generate(4).unwrap();
        assert!(Tree::from_edges(&g, &[(0, 1), (1, 2), (2, 3)]).is_ok());
        assert!(Tree::from_edges(&g, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }
}
