//! Dense spectral analysis of graphs.
//!
//! A [`Graph`] is stored as a dense, nonnegative weight matrix. Everything
//! else is derived from it: degree vectors, the Laplacian family, spectra,
//! cuts, spectral embeddings, clusterings and down-scaled subgraphs.
//!
//! | Module | What it covers |
//! |--------|----------------|
//! | [`graph`] | construction, canonical topologies, Laplacians, walks, distances, trees, products |
//! | [`spectral`] | symmetric / generalized eigendecomposition, power method, polynomials, DFT bases |
//! | [`cuts`] | cut metrics, exhaustive search, max-flow min-cut, sweep cuts, Cheeger bounds |
//! | [`embedding`] | Laplacian eigenmaps, Fiedler bipartition, k-means, commute-time and diffusion distances |
//! | [`sampling`] | PageRank and graph down-scaling strategies |
//! | [`io`] | edge CSV / graph JSON files and embedding CSV output |
//! | [`cli`] | the `spectral-graph` command line front end |
//!
//! ```
//! use spectral_graph::{Graph, spectral::{eig_symmetric, MatrixKind}, graph::LaplacianVariant};
//!
//! // 0 -- 1 -- 2
//! let g = Graph::new(3, false, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
//! let l = g.laplacian(&LaplacianVariant::Standard).unwrap();
//! let eig = eig_symmetric(&l, MatrixKind::Laplacian).unwrap();
//! assert!((eig.eigenvalues[2] - 3.0).abs() < 1e-12);
//! ```

pub mod cli;
pub mod cuts;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod io;
mod linalg;
pub mod sampling;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::Graph;

/// Seed used by the power method, k-means seeding and the command line
/// when nothing else is given.
pub const DEFAULT_SEED: u64 = 42;
