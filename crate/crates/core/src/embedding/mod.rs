//! Spectral vertex embeddings, Fiedler bipartitions and clustering.
//!
//! Row `n` of an embedding is the spectral vector `q_n` built from the
//! eigenvectors `u_1 ... u_M`. The constant eigenvector `u_0` is never used.

mod distance;
mod kmeans;

use std::fmt;
use std::str::FromStr;

use ndarray::{Array2, Axis};
use serde::{Deserialize, Serialize};

use crate::cuts::Partition;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};
use crate::spectral::{decompose, zero_tolerance, EigenDecomposition, MatrixKind};

pub use distance::{
    commute_time_distance, commute_time_pinv, diffusion_distance, diffusion_distance_spectral,
    laplacian_pseudoinverse,
};
pub use kmeans::{kmeans_refine, ClusterAssignment, MAX_KMEANS_ITERATIONS};

/// The six eigenmaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "type")]
pub enum Mapping {
    /// `u_k` of `L`
    Laplacian,
    /// `u_k` of `L u = λ D u`
    Generalized,
    /// `v_k` of `L_N`
    Normalized,
    /// `u_k / √λ_k` of `L`
    CommuteTime,
    /// `u_k (1 - λ_k)^t` of the generalized problem
    Diffusion { t: u32 },
    /// `u_k / λ_k` of the generalized problem
    CumulativeDiffusion,
}

impl Mapping {
    pub fn name(self) -> &'static str {
        match self {
            Mapping::Laplacian => "laplacian",
            Mapping::Generalized => "generalized",
            Mapping::Normalized => "normalized",
            Mapping::CommuteTime => "commute_time",
            Mapping::Diffusion { .. } => "diffusion",
            Mapping::CumulativeDiffusion => "cumulative_diffusion",
        }
    }

    /// Parses a mapping name; `t` is only used by `diffusion`.
    pub fn from_name(name: &str, t: u32) -> Result<Mapping> {
        Ok(match name {
            "laplacian" => Mapping::Laplacian,
            "generalized" => Mapping::Generalized,
            "normalized" => Mapping::Normalized,
            "commute_time" => Mapping::CommuteTime,
            "diffusion" => Mapping::Diffusion { t },
            "cumulative_diffusion" => Mapping::CumulativeDiffusion,
            _ => {
                return Err(Error::UnknownName {
                    kind: "mapping",
                    name: name.into(),
                })
            }
        })
    }

    fn kind(self) -> MatrixKind {
        match self {
            Mapping::Laplacian | Mapping::CommuteTime => MatrixKind::Laplacian,
            Mapping::Normalized => MatrixKind::NormalizedLaplacian,
            Mapping::Generalized | Mapping::Diffusion { .. } | Mapping::CumulativeDiffusion => {
                MatrixKind::GeneralizedLaplacian
            }
        }
    }

    fn needs_connectivity(self) -> bool {
        matches!(
            self,
            Mapping::CommuteTime | Mapping::Diffusion { .. } | Mapping::CumulativeDiffusion
        )
    }
}

/// Factor applied to the eigenvector of eigenvalue `lambda`.
pub fn column_scale(mapping: Mapping, lambda: f64) -> f64 {
    match mapping {
        Mapping::Laplacian | Mapping::Generalized | Mapping::Normalized => 1.0,
        Mapping::CommuteTime => 1.0 / lambda.sqrt(),
        Mapping::Diffusion { t } => (1.0 - lambda).powi(t as i32),
        Mapping::CumulativeDiffusion => 1.0 / lambda,
    }
}

/// Post-processing of embedding rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    None,
    /// `q_n / ‖q_n‖`
    UnitNorm,
    /// `sign(q_n)`
    Sign,
    /// `sign(q_n - (max + min)/2)` per column
    SignMid,
    /// `(q_n - min) / (max - min)` per column
    MinMax,
}

impl Normalization {
    pub const ALL: [Normalization; 5] = [
        Normalization::None,
        Normalization::UnitNorm,
        Normalization::Sign,
        Normalization::SignMid,
        Normalization::MinMax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Normalization::None => "none",
            Normalization::UnitNorm => "unit_norm",
            Normalization::Sign => "sign",
            Normalization::SignMid => "sign_mid",
            Normalization::MinMax => "minmax",
        }
    }
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts the scheme name or its index `0..=4`.
impl FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(i) = s.parse::<usize>() {
            return Normalization::ALL
                .get(i)
                .copied()
                .ok_or_else(|| Error::UnknownName {
                    kind: "normalization",
                    name: s.into(),
                });
        }
        Normalization::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "normalization",
                name: s.into(),
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralEmbedding {
    /// `n × M`, row `n` is `q_n`.
    pub coords: Array2<f64>,
    pub mapping: Mapping,
    pub normalization: Normalization,
    /// `λ_1 ... λ_M` behind the columns.
    pub eigenvalues: Vec<f64>,
}

impl SpectralEmbedding {
    pub fn dim(&self) -> usize {
        self.coords.ncols()
    }

    pub fn n(&self) -> usize {
        self.coords.nrows()
    }
}

fn lambda1_or_refuse(e: &EigenDecomposition) -> Result<()> {
    let lambda1 = e.eigenvalues.get(1).copied().unwrap_or(0.0);
    if lambda1.abs() < e.zero_tolerance() {
        return Err(Error::DisconnectedForScaling(lambda1));
    }
    Ok(())
}

/// `M`-dimensional embedding of an undirected graph, `1 <= M <= n-1`.
pub fn embed(g: &Graph, mapping: Mapping, dim: usize) -> Result<SpectralEmbedding> {
    if g.is_directed() {
        return Err(Error::Directed);
    }
    let max = g.n().saturating_sub(1);
    if dim == 0 || dim > max {
        return Err(Error::DimensionTooLarge { dim, max });
    }
    let e = decompose(g, mapping.kind())?;
    if mapping.needs_connectivity() {
        lambda1_or_refuse(&e)?;
    }
    let eigenvalues: Vec<f64> = e.eigenvalues.iter().skip(1).take(dim).copied().collect();
    let mut coords = e.eigenvectors.slice(ndarray::s![.., 1..=dim]).to_owned();
    for (mut col, &lambda) in coords.axis_iter_mut(Axis(1)).zip(&eigenvalues) {
        col *= column_scale(mapping, lambda);
    }
    Ok(SpectralEmbedding {
        coords,
        mapping,
        normalization: Normalization::None,
        eigenvalues,
    })
}

fn sign(x: f64) -> f64 {
    if x < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// Applies `scheme` to the raw coordinates. `sign(0)` is `+1`.
pub fn normalize_embedding(
    e: &SpectralEmbedding,
    scheme: Normalization,
) -> Result<SpectralEmbedding> {
    let mut coords = e.coords.clone();
    match scheme {
        Normalization::None => {}
        Normalization::UnitNorm => {
            for mut row in coords.rows_mut() {
                let len = row.dot(&row).sqrt();
                if len > 0.0 {
                    row /= len;
                }
            }
        }
        Normalization::Sign => coords.mapv_inplace(sign),
        Normalization::SignMid | Normalization::MinMax => {
            for (j, mut col) in coords.axis_iter_mut(Axis(1)).enumerate() {
                let lo = col.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                if scheme == Normalization::SignMid {
                    let mid = (hi + lo) / 2.0;
                    col.mapv_inplace(|x| sign(x - mid));
                } else {
                    if hi == lo {
                        return Err(Error::DegenerateColumn(j));
                    }
                    col.mapv_inplace(|x| (x - lo) / (hi - lo));
                }
            }
        }
    }
    Ok(SpectralEmbedding {
        coords,
        normalization: scheme,
        ..e.clone()
    })
}

/// Eigenproblem behind a Fiedler bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiedlerVariant {
    Laplacian,
    Generalized,
    Normalized,
}

impl FiedlerVariant {
    fn kind(self) -> MatrixKind {
        match self {
            FiedlerVariant::Laplacian => MatrixKind::Laplacian,
            FiedlerVariant::Generalized => MatrixKind::GeneralizedLaplacian,
            FiedlerVariant::Normalized => MatrixKind::NormalizedLaplacian,
        }
    }
}

/// `E = {n : u_1(n) > 0}`, `H` the rest.
///
/// A graph with exactly two components is split along them. More components
/// are refused with [`Error::Disconnected`].
pub fn fiedler_bipartition(g: &Graph, variant: FiedlerVariant) -> Result<Partition> {
    if g.is_directed() {
        return Err(Error::Directed);
    }
    let components = connected_components(g);
    match components.len() {
        1 => {}
        2 => return Partition::new(g, components),
        _ => return Err(Error::Disconnected { components }),
    }
    if g.n() < 2 {
        return Err(Error::EmptySide);
    }
    let e = decompose(g, variant.kind())?;
    let u1 = e.vector(1);
    let inside: Vec<usize> = (0..g.n()).filter(|&v| u1[v] > 0.0).collect();
    Partition::bipartition(g, &inside)
}

/// Clusters by the sign pattern of each row, `+1` for entries `>= 0`.
/// Labels are numbered in order of first appearance.
pub fn sign_clusters(e: &SpectralEmbedding) -> Vec<usize> {
    let mut codes: Vec<Vec<bool>> = Vec::new();
    e.coords
        .rows()
        .into_iter()
        .map(|row| {
            let code: Vec<bool> = row.iter().map(|&x| x >= 0.0).collect();
            codes.iter().position(|c| *c == code).unwrap_or_else(|| {
                codes.push(code);
                codes.len() - 1
            })
        })
        .collect()
}

/// `δ_r = 1 - λ_k / λ_(k+1)`, clamped to `[0, 1]`. An eigenvalue within the
/// zero tolerance of the list counts as exactly zero.
pub fn relative_eigengap(eigenvalues: &[f64], k: usize) -> Result<f64> {
    if k + 1 >= eigenvalues.len() {
        return Err(Error::DimensionTooLarge {
            dim: k + 1,
            max: eigenvalues.len().saturating_sub(1),
        });
    }
    let tol = zero_tolerance(eigenvalues);
    let clamp = |l: f64| if l.abs() < tol { 0.0 } else { l };
    let (lk, next) = (clamp(eigenvalues[k]), clamp(eigenvalues[k + 1]));
    if next <= 0.0 {
        return Err(Error::ZeroDenominator);
    }
    Ok((1.0 - lk / next).clamp(0.0, 1.0))
}
