//! Graph representation and the matrices derived from it.
//!
//! The weight matrix `W` is the single source of truth. The adjacency
//! matrix is its 0/1 pattern, degrees are its row sums and every Laplacian
//! variant is assembled from those two.

mod paths;
mod topology;
mod tree;
mod walks;

use std::collections::HashSet;

use ndarray::Array2;
use serde::Serialize;

use crate::error::{Error, Result};

pub use paths::{
    betweenness, connected_components, distances, euler_path_exists, Betweenness, Distances,
    EulerKind,
};
pub use topology::{graph_product, ProductKind, Topology};
pub use tree::{log_distance, minimum_spanning_tree, Tree};
pub use walks::{k_neighborhood, walk_counts, WalkCounts};

/// A graph on `n` vertices with a nonnegative weight matrix.
///
/// Invariants: weights are finite and `>= 0`, the diagonal is zero, and the
/// matrix is exactly symmetric when the graph is undirected.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    directed: bool,
    weights: Array2<f64>,
}

impl Graph {
    /// Builds a graph from an edge list. Undirected edges are mirrored.
    pub fn new(n: usize, directed: bool, edges: &[(usize, usize, f64)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize("graph needs at least one vertex".into()));
        }
        let mut weights = Array2::zeros((n, n));
        let mut seen = HashSet::with_capacity(edges.len());
        for &(src, dst, weight) in edges {
            for index in [src, dst] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if src == dst {
                return Err(Error::SelfLoop(src));
            }
            if !(weight > 0.0 && weight.is_finite()) {
                return Err(Error::NonpositiveWeight { src, dst, weight });
            }
            let key = if directed {
                (src, dst)
            } else {
                (src.min(dst), src.max(dst))
            };
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(src, dst));
            }
            weights[[src, dst]] = weight;
            if !directed {
                weights[[dst, src]] = weight;
            }
        }
        Ok(Graph { directed, weights })
    }

    /// Wraps an existing weight matrix after checking the graph invariants.
    pub fn from_weights(weights: Array2<f64>, directed: bool) -> Result<Self> {
        let (rows, cols) = weights.dim();
        if rows != cols {
            return Err(Error::NotSquare(rows, cols));
        }
        if rows == 0 {
            return Err(Error::InvalidSize("graph needs at least one vertex".into()));
        }
        for ((m, k), &w) in weights.indexed_iter() {
            if !(w >= 0.0 && w.is_finite()) {
                return Err(Error::InvalidWeights(format!("entry ({m}, {k}) = {w}")));
            }
            if m == k && w != 0.0 {
                return Err(Error::SelfLoop(m));
            }
            if !directed && w != weights[[k, m]] {
                return Err(Error::NotSymmetric { row: m, col: k });
            }
        }
        Ok(Graph { directed, weights })
    }

    pub fn n(&self) -> usize {
        self.weights.nrows()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn weights(&self) -> &Array2<f64> {
        &self.weights
    }

    pub fn weight(&self, m: usize, n: usize) -> f64 {
        self.weights[[m, n]]
    }

    /// 0/1 adjacency pattern: any positive weight counts as an edge.
    pub fn adjacency(&self) -> Array2<f64> {
        self.weights.mapv(|w| if w > 0.0 { 1.0 } else { 0.0 })
    }

    /// Row sums of the weight matrix (out-degrees for directed graphs).
    pub fn degrees(&self) -> DegreeVector {
        DegreeVector(self.weights.rows().into_iter().map(|r| r.sum()).collect())
    }

    /// Sum of all vertex degrees.
    pub fn volume(&self) -> f64 {
        self.degrees().volume()
    }

    /// Edge list. Undirected edges are reported once with `m < n`.
    pub fn edges(&self) -> Vec<(usize, usize, f64)> {
        let n = self.n();
        let mut out = Vec::new();
        for m in 0..n {
            let start = if self.directed { 0 } else { m + 1 };
            for k in start..n {
                let w = self.weights[[m, k]];
                if w > 0.0 {
                    out.push((m, k, w));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Out-neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.weights
            .row(v)
            .into_iter()
            .enumerate()
            .filter(|(_, &w)| w > 0.0)
            .map(|(k, _)| k)
    }

    /// Relabels vertices: vertex `i` of the result is vertex `perm[i]` of
    /// `self`, i.e. the result has weight matrix `P W Pᵀ` with `P[i][perm[i]] = 1`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        let mut hit = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        let weights = Array2::from_shape_fn((n, n), |(i, j)| self.weights[[perm[i], perm[j]]]);
        Ok(Graph {
            directed: self.directed,
            weights,
        })
    }

    /// Subgraph induced by `vertices`, in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.n();
        if vertices.is_empty() {
            return Err(Error::InvalidSize(
                "induced subgraph needs at least one vertex".into(),
            ));
        }
        if let Some(&index) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange { index, n });
        }
        let k = vertices.len();
        let weights =
            Array2::from_shape_fn((k, k), |(i, j)| self.weights[[vertices[i], vertices[j]]]);
        Graph::from_weights(weights, self.directed)
    }

    /// Laplacian of the requested variant.
    ///
    /// Zero-degree vertices get a zero entry in `D^(-1/2)` / `D^(-1)`, so their
    /// rows and columns of the normalized and random-walk Laplacians vanish.
    pub fn laplacian(&self, variant: &LaplacianVariant) -> Result<Array2<f64>> {
        let d = self.degrees();
        let mut l = -&self.weights;
        for (i, &di) in d.iter().enumerate() {
            l[[i, i]] += di;
        }
        match variant {
            LaplacianVariant::Standard => Ok(l),
            LaplacianVariant::Normalized => {
                let s = d.inv_sqrt();
                Ok(unit_diagonal(scale_both(&l, &s, &s), &d))
            }
            LaplacianVariant::RandomWalk => {
                let inv: Vec<f64> = d
                    .iter()
                    .map(|&x| if x > 0.0 { 1.0 / x } else { 0.0 })
                    .collect();
                let ones = vec![1.0; d.len()];
                Ok(unit_diagonal(scale_both(&l, &inv, &ones), &d))
            }
            LaplacianVariant::VertexWeighted(v) => {
                if v.len() != self.n() {
                    return Err(Error::DimensionMismatch {
                        expected: self.n(),
                        got: v.len(),
                    });
                }
                let s: Vec<f64> = v.values().iter().map(|x| x.sqrt()).collect();
                Ok(scale_both(&l, &s, &s))
            }
        }
    }

    /// `W_N = D^(-1/2) W D^(-1/2)`, the matrix the power method works on.
    pub fn normalized_weights(&self) -> Array2<f64> {
        let s = self.degrees().inv_sqrt();
        scale_both(&self.weights, &s, &s)
    }

    /// Random-walk transition matrix `P = D^(-1) W`; zero-degree rows stay zero.
    pub fn transition_matrix(&self) -> Array2<f64> {
        let d = self.degrees();
        let mut p = self.weights.clone();
        for (mut row, &di) in p.rows_mut().into_iter().zip(d.iter()) {
            if di > 0.0 {
                row /= di;
            }
        }
        p
    }
}

// d_i / d_i is not always exactly 1 in floating point
fn unit_diagonal(mut l: Array2<f64>, d: &[f64]) -> Array2<f64> {
    for (i, &di) in d.iter().enumerate() {
        if di > 0.0 {
            l[[i, i]] = 1.0;
        }
    }
    l
}

/// `diag(left) · m · diag(right)`
pub(crate) fn scale_both(m: &Array2<f64>, left: &[f64], right: &[f64]) -> Array2<f64> {
    Array2::from_shape_fn(m.dim(), |(i, j)| left[i] * m[[i, j]] * right[j])
}

/// Vertex degrees `D_mm = Σ_n W_mn`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeVector(Vec<f64>);

impl DegreeVector {
    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn volume(&self) -> f64 {
        self.0.iter().sum()
    }

    /// `D^(-1/2)` diagonal with zero for isolated vertices.
    pub fn inv_sqrt(&self) -> Vec<f64> {
        self.0
            .iter()
            .map(|&x| if x > 0.0 { 1.0 / x.sqrt() } else { 0.0 })
            .collect()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl std::ops::Deref for DegreeVector {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

/// Shorthand for [`Graph::degrees`].
pub fn degree_vector(g: &Graph) -> DegreeVector {
    g.degrees()
}

/// Strictly positive vertex weights, the diagonal of `V` in `V^(1/2) L V^(1/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexWeights(Vec<f64>);

impl VertexWeights {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|v| !(**v > 0.0 && v.is_finite())) {
            return Err(Error::InvalidWeights(format!(
                "vertex weight {bad} is not positive"
            )));
        }
        Ok(VertexWeights(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Which member of the Laplacian family to build.
#[derive(Debug, Clone, PartialEq)]
pub enum LaplacianVariant {
    /// `L = D - W`
    Standard,
    /// `L_N = D^(-1/2) L D^(-1/2)`
    Normalized,
    /// `L_RW = D^(-1) L`
    RandomWalk,
    /// `L_V = V^(1/2) L V^(1/2)`
    VertexWeighted(VertexWeights),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, false, &[(1, 1, 1.0)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::new(3, false, &[(0, 3, 1.0)]),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::new(3, false, &[(0, 1, 0.0)]),
            Err(Error::NonpositiveWeight { .. })
        ));
        assert!(matches!(
            Graph::new(3, false, &[(0, 1, 1.0), (1, 0, 2.0)]),
            Err(Error::DuplicateEdge(1, 0))
        ));
        // both arc directions are distinct in a directed graph
        assert!(Graph::new(3, true, &[(0, 1, 1.0), (1, 0, 2.0)]).is_ok());
    }

    #[test]
    fn empty_edge_list_gives_zero_matrix() {
        let g = Graph::new(3, false, &[]).unwrap();
        assert!(g.weights().iter().all(|&w| w == 0.0));
    }

    #[test]
    fn undirected_edge_is_mirrored() {
        let g = Graph::new(2, false, &[(0, 1, 0.23)]).unwrap();
        assert_eq!(g.weight(0, 1), 0.23);
        assert_eq!(g.weight(1, 0), 0.23);
    }

    #[test]
    fn isolated_vertex_has_zero_degree_and_zero_normalized_row() {
        let g = Graph::new(3, false, &[(0, 1, 2.0)]).unwrap();
        assert_eq!(g.degrees().values(), &[2.0, 2.0, 0.0]);
        let ln = g.laplacian(&LaplacianVariant::Normalized).unwrap();
        assert_eq!(ln[[0, 0]], 1.0);
        assert!(ln.row(2).iter().all(|&x| x == 0.0));
        let lrw = g.laplacian(&LaplacianVariant::RandomWalk).unwrap();
        assert_eq!(lrw[[0, 1]], -1.0);
        assert!(lrw.row(2).iter().all(|&x| x == 0.0));
    }

    #[test]
    fn complete_graph_degrees() {
        let g = Graph::new(
            4,
            false,
            &[
                (0, 1, 1.0),
                (0, 2, 1.0),
                (0, 3, 1.0),
                (1, 2, 1.0),
                (1, 3, 1.0),
                (2, 3, 1.0),
            ],
        )
        .unwrap();
        assert_eq!(g.degrees().values(), &[3.0; 4]);
    }

    #[test]
    fn permute_rejects_non_bijection() {
        let g = Graph::new(3, false, &[(0, 1, 1.0)]).unwrap();
        assert!(matches!(
            g.permute(&[0, 0, 1]),
            Err(Error::NotAPermutation(3))
        ));
        assert!(matches!(g.permute(&[0, 1]), Err(Error::NotAPermutation(3))));
        assert_eq!(g.permute(&[0, 1, 2]).unwrap(), g);
    }

    #[test]
    fn from_weights_checks_invariants() {
        let asym = ndarray::array![[0.0, 1.0], [0.5, 0.0]];
        assert!(matches!(
            Graph::from_weights(asym.clone(), false),
            Err(Error::NotSymmetric { .. })
        ));
        assert!(Graph::from_weights(asym, true).is_ok());
        let neg = ndarray::array![[0.0, -1.0], [-1.0, 0.0]];
        assert!(Graph::from_weights(neg, false).is_err());
        assert!(VertexWeights::new(vec![1.0, 0.0]).is_err());
    }
}
