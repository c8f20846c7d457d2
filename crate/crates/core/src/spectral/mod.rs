//! Eigendecomposition of graph matrices.
//!
//! All symmetric variants go through one dense Householder/QL solver. The
//! generalized problem `L u = λ D u` is solved through the normalized
//! Laplacian and mapped back with `u = D^(-1/2) v`. Directed adjacency
//! matrices are never handed to a solver; see [`dft`] for the closed forms.

pub mod dft;
mod poly;
mod power;

use ndarray::{Array1, Array2, ArrayView1, Axis};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, LaplacianVariant};
use crate::linalg::symmetric_eigen;

pub use dft::{circular_laplacian_eigenvalues, dft_basis, DftBasis};
pub use poly::{characteristic_polynomial, minimal_polynomial, CharPoly, MAX_CHARPOLY_SIZE};
pub use power::{power_method_eig, power_method_seeded, EigenPair};

/// Entries of a matrix that is asked to be symmetric may differ by this much.
pub const SYMMETRY_TOLERANCE: f64 = 1e-10;

/// Which matrix a decomposition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    NormalizedLaplacian,
    GeneralizedLaplacian,
    NormalizedWeight,
    /// Any other symmetric matrix.
    Other,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::NormalizedLaplacian => "normalized_laplacian",
            MatrixKind::GeneralizedLaplacian => "generalized_laplacian",
            MatrixKind::NormalizedWeight => "normalized_weight",
            MatrixKind::Other => "other",
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            MatrixKind::Adjacency,
            MatrixKind::Laplacian,
            MatrixKind::NormalizedLaplacian,
            MatrixKind::GeneralizedLaplacian,
            MatrixKind::NormalizedWeight,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::UnknownName {
            kind: "matrix variant",
            name: s.into(),
        })
    }
}

/// Ascending eigenvalues with eigenvectors as columns.
///
/// Each eigenvector is scaled to unit 2-norm (`uᵀ D u = 1` for the
/// generalized kind) and its largest-magnitude entry is positive, ties going
/// to the lowest index.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub eigenvalues: Array1<f64>,
    pub eigenvectors: Array2<f64>,
    pub kind: MatrixKind,
}

impl EigenDecomposition {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn vector(&self, k: usize) -> ArrayView1<'_, f64> {
        self.eigenvectors.column(k)
    }

    /// Threshold below which an eigenvalue counts as zero.
    pub fn zero_tolerance(&self) -> f64 {
        zero_tolerance(self.eigenvalues.as_slice().unwrap_or(&[]))
    }

    /// Number of eigenvalues that are zero up to [`Self::zero_tolerance`].
    pub fn zero_multiplicity(&self) -> usize {
        let tol = self.zero_tolerance();
        self.eigenvalues.iter().filter(|l| l.abs() < tol).count()
    }
}

/// `1e-9 · max(1, max |λ|)`
pub fn zero_tolerance(eigenvalues: &[f64]) -> f64 {
    let scale = eigenvalues.iter().fold(1.0f64, |acc, l| acc.max(l.abs()));
    1e-9 * scale
}

/// Flips `v` so that its largest-magnitude entry is positive. Entries within
/// a relative 1e-9 of the maximum count as tied; the lowest index wins.
pub fn align_sign(v: &mut [f64]) {
    let max = v.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    if max == 0.0 {
        return;
    }
    let lead = v
        .iter()
        .position(|x| x.abs() >= max * (1.0 - 1e-9))
        .expect("max exists");
    if v[lead] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

fn align_columns(vectors: &mut Array2<f64>) {
    for mut col in vectors.axis_iter_mut(Axis(1)) {
        let mut buf = col.to_vec();
        align_sign(&mut buf);
        col.assign(&Array1::from(buf));
    }
}

pub(crate) fn check_symmetric(m: &Array2<f64>) -> Result<()> {
    let (rows, cols) = m.dim();
    if rows != cols {
        return Err(Error::NotSquare(rows, cols));
    }
    for i in 0..rows {
        for j in i + 1..rows {
            if (m[[i, j]] - m[[j, i]]).abs() > SYMMETRY_TOLERANCE {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Full eigendecomposition of a symmetric matrix.
pub fn eig_symmetric(m: &Array2<f64>, kind: MatrixKind) -> Result<EigenDecomposition> {
    check_symmetric(m)?;
    let (eigenvalues, mut eigenvectors) = symmetric_eigen(m);
    align_columns(&mut eigenvectors);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
        kind,
    })
}

/// Generalized problem `L u = λ D u`.
///
/// Eigenvalues are those of `L_N`; eigenvectors are `u_k = D^(-1/2) v_k`
/// so that `u_kᵀ D u_k = 1`. An isolated vertex contributes a zero
/// eigenvalue whose mapped vector is zero.
pub fn eig_generalized(g: &Graph) -> Result<EigenDecomposition> {
    if g.is_directed() {
        return Err(Error::Directed);
    }
    let ln = g.laplacian(&LaplacianVariant::Normalized)?;
    let normalized = eig_symmetric(&ln, MatrixKind::NormalizedLaplacian)?;
    let s = g.degrees().inv_sqrt();
    let mut u = normalized.eigenvectors;
    for (mut row, &si) in u.axis_iter_mut(Axis(0)).zip(&s) {
        row *= si;
    }
    align_columns(&mut u);
    Ok(EigenDecomposition {
        eigenvalues: normalized.eigenvalues,
        eigenvectors: u,
        kind: MatrixKind::GeneralizedLaplacian,
    })
}

/// Matrix of the given kind for `g`. `Other` has no graph matrix.
pub fn graph_matrix(g: &Graph, kind: MatrixKind) -> Result<Array2<f64>> {
    match kind {
        MatrixKind::Adjacency => Ok(g.adjacency()),
        MatrixKind::Laplacian => g.laplacian(&LaplacianVariant::Standard),
        MatrixKind::NormalizedLaplacian | MatrixKind::GeneralizedLaplacian => {
            g.laplacian(&LaplacianVariant::Normalized)
        }
        MatrixKind::NormalizedWeight => Ok(g.normalized_weights()),
        MatrixKind::Other => Err(Error::InvalidSize(
            "no graph matrix for kind `other`".into(),
        )),
    }
}

/// Decomposes the requested matrix of an undirected graph.
pub fn decompose(g: &Graph, kind: MatrixKind) -> Result<EigenDecomposition> {
    if g.is_directed() {
        return Err(Error::Directed);
    }
    match kind {
        MatrixKind::GeneralizedLaplacian => eig_generalized(g),
        _ => eig_symmetric(&graph_matrix(g, kind)?, kind),
    }
}

/// Smoothness `xᵀ L x` of the unit-normalized `x`. A zero vector is
/// perfectly smooth.
pub fn smoothness_index(l: &Array2<f64>, x: &[f64]) -> Result<f64> {
    if l.nrows() != x.len() || l.ncols() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: l.nrows(),
            got: x.len(),
        });
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Ok(0.0);
    }
    let x: Vec<f64> = x.iter().map(|v| v / norm).collect();
    let xa = Array1::from(x.clone());
    let quadratic = xa.dot(&l.dot(&xa));
    if l.rows()
        .into_iter()
        .all(|r| r.sum().abs() <= 1e-12 * (1.0 + r.iter().map(|v| v.abs()).sum::<f64>()))
    {
        let w = Array2::from_shape_fn(l.dim(), |(m, n)| if m == n { 0.0 } else { -l[[m, n]] });
        let energy = edge_energy(&w, &x);
        debug_assert!(
            (quadratic - energy).abs() <= 1e-10 * (1.0 + quadratic.abs()),
            "{quadratic} vs {energy}"
        );
    }
    Ok(quadratic)
}

/// `½ Σ_m Σ_n W_mn (x(n) - x(m))²`
pub fn edge_energy(w: &Array2<f64>, x: &[f64]) -> f64 {
    let mut total = 0.0;
    for ((m, n), &wmn) in w.indexed_iter() {
        if wmn != 0.0 {
            let d = x[n] - x[m];
            total += wmn * d * d;
        }
    }
    0.5 * total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Topology;

    #[test]
    fn identity_spectrum() {
        let e = eig_symmetric(&Array2::eye(5), MatrixKind::Other).unwrap();
        assert!(e.eigenvalues.iter().all(|&l| (l - 1.0).abs() < 1e-15));
    }

    #[test]
    fn asymmetric_rejected() {
        let m = ndarray::array![[0.0, 1.0], [0.0, 0.0]];
        assert!(matches!(
            eig_symmetric(&m, MatrixKind::Other),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn sign_convention() {
        let mut v = vec![0.1, -0.9, 0.3];
        align_sign(&mut v);
        assert_eq!(v, vec![-0.1, 0.9, -0.3]);
        let mut tie = vec![-0.5, 0.5];
        align_sign(&mut tie);
        assert_eq!(tie, vec![0.5, -0.5]);
    }

    #[test]
    fn constant_vector_is_perfectly_smooth() {
        let g = Topology::Circular.generate(6).unwrap();
        let l = g.laplacian(&LaplacianVariant::Standard).unwrap();
        let x = vec![1.0 / 6f64.sqrt(); 6];
        assert!(smoothness_index(&l, &x).unwrap().abs() < 1e-15);
    }

    #[test]
    fn generalized_vectors_are_d_normalized() {
        let g = Topology::Path.generate(5).unwrap();
        let e = eig_generalized(&g).unwrap();
        let d = g.degrees();
        for k in 0..5 {
            let u = e.vector(k);
            let q: f64 = u.iter().zip(d.iter()).map(|(a, b)| a * a * b).sum();
            assert!((q - 1.0).abs() < 1e-10);
        }
    }
}
