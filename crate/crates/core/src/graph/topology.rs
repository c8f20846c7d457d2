use ndarray::Array2;

use super::Graph;
use crate::error::{Error, Result};

/// Canonical unit-weight topologies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Complete,
    /// Vertices `0..left` on one side, `left..left + right` on the other.
    CompleteBipartite {
        left: usize,
        right: usize,
    },
    /// Vertex 0 is the centre.
    Star,
    Circular,
    Path,
    /// Arcs `k -> k-1 (mod n)`, i.e. `A[k][k-1] = 1`.
    DirectedCircular,
    /// Arcs `k -> k-1` for `k >= 1`.
    DirectedPath,
}

impl Topology {
    /// Builds the topology on `n` vertices with unit weights.
    pub fn generate(self, n: usize) -> Result<Graph> {
        let min = match self {
            Topology::Circular => 3,
            _ => 2,
        };
        if n < min {
            return Err(Error::InvalidSize(format!(
                "{self:?} needs at least {min} vertices, got {n}"
            )));
        }
        let mut edges = Vec::new();
        let directed = matches!(self, Topology::DirectedCircular | Topology::DirectedPath);
        match self {
            Topology::Complete => {
                for m in 0..n {
                    for k in m + 1..n {
                        edges.push((m, k, 1.0));
                    }
                }
            }
            Topology::CompleteBipartite { left, right } => {
                if left == 0 || right == 0 || left + right != n {
                    return Err(Error::InvalidSize(format!(
                        "bipartite sides {left} + {right} must be positive and sum to {n}"
                    )));
                }
                for m in 0..left {
                    for k in left..n {
                        edges.push((m, k, 1.0));
                    }
                }
            }
            Topology::Star => edges.extend((1..n).map(|k| (0, k, 1.0))),
            Topology::Path => edges.extend((1..n).map(|k| (k - 1, k, 1.0))),
            Topology::Circular => {
                edges.extend((1..n).map(|k| (k - 1, k, 1.0)));
                edges.push((n - 1, 0, 1.0));
            }
            Topology::DirectedCircular => edges.extend((0..n).map(|k| (k, (k + n - 1) % n, 1.0))),
            Topology::DirectedPath => edges.extend((1..n).map(|k| (k, k - 1, 1.0))),
        }
        Graph::new(n, directed, &edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    /// `W = W1 ⊗ W2`
    Kronecker,
    /// `W = W1 ⊗ I + I ⊗ W2`
    Cartesian,
}

impl std::str::FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kronecker" => Ok(ProductKind::Kronecker),
            "cartesian" => Ok(ProductKind::Cartesian),
            _ => Err(Error::UnknownName {
                kind: "product",
                name: s.into(),
            }),
        }
    }
}

/// Graph product; vertex `(m1, m2)` of the result has index `m1 * n2 + m2`.
pub fn graph_product(g1: &Graph, g2: &Graph, kind: ProductKind) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let (w1, w2) = (g1.weights(), g2.weights());
    let weights = Array2::from_shape_fn((n1 * n2, n1 * n2), |(a, b)| {
        let (a1, a2) = (a / n2, a % n2);
        let (b1, b2) = (b / n2, b % n2);
        match kind {
            ProductKind::Kronecker => w1[[a1, b1]] * w2[[a2, b2]],
            ProductKind::Cartesian => {
                let mut w = 0.0;
                if a2 == b2 {
                    w += w1[[a1, b1]];
                }
                if a1 == b1 {
                    w += w2[[a2, b2]];
                }
                w
            }
        }
    });
    Graph {
        directed: g1.is_directed() || g2.is_directed(),
        weights,
    }
}
