use ndarray::{Array2, ArrayView1};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::SpectralEmbedding;
use crate::error::{Error, Result};

pub const MAX_KMEANS_ITERATIONS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusterAssignment {
    pub labels: Vec<usize>,
    /// `k × M`
    #[serde(skip)]
    pub centroids: Array2<f64>,
    pub iterations: usize,
}

impl ClusterAssignment {
    pub fn k(&self) -> usize {
        self.centroids.nrows()
    }

    /// Sum of squared distances from each point to its centroid.
    pub fn objective(&self, points: &Array2<f64>) -> f64 {
        points
            .rows()
            .into_iter()
            .zip(&self.labels)
            .map(|(p, &c)| squared_distance(p, self.centroids.row(c)))
            .sum()
    }
}

fn squared_distance(a: ArrayView1<f64>, b: ArrayView1<f64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn assign(points: &Array2<f64>, centroids: &Array2<f64>) -> Vec<usize> {
    points
        .rows()
        .into_iter()
        .map(|p| {
            let mut best = (f64::INFINITY, 0);
            for (c, centroid) in centroids.rows().into_iter().enumerate() {
                let d = squared_distance(p, centroid);
                if d < best.0 {
                    best = (d, c);
                }
            }
            best.1
        })
        .collect()
}

/// Mean of each cluster's members; a cluster that lost all members keeps
/// its previous centroid.
fn means(points: &Array2<f64>, labels: &[usize], previous: &Array2<f64>) -> Array2<f64> {
    let mut sums = Array2::<f64>::zeros(previous.dim());
    let mut counts = vec![0usize; previous.nrows()];
    for (p, &c) in points.rows().into_iter().zip(labels) {
        let mut row = sums.row_mut(c);
        row += &p;
        counts[c] += 1;
    }
    for (c, &count) in counts.iter().enumerate() {
        if count == 0 {
            sums.row_mut(c).assign(&previous.row(c));
        } else {
            sums.row_mut(c).mapv_inplace(|x| x / count as f64);
        }
    }
    sums
}

/// Lloyd's k-means on the embedding rows.
///
/// The first centroid is a seeded random row; each further centroid is the
/// row farthest from those already chosen (lowest index on ties). Iteration
/// stops when no label changes or after [`MAX_KMEANS_ITERATIONS`].
pub fn kmeans_refine(e: &SpectralEmbedding, k: usize, seed: u64) -> Result<ClusterAssignment> {
    let points = &e.coords;
    let n = points.nrows();
    if k == 0 || k > n {
        return Err(Error::InvalidClusterCount { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = vec![rng.gen_range(0..n)];
    let mut nearest: Vec<f64> = points
        .rows()
        .into_iter()
        .map(|p| squared_distance(p, points.row(chosen[0])))
        .collect();
    while chosen.len() < k {
        let mut far = (f64::NEG_INFINITY, 0);
        for (i, &d) in nearest.iter().enumerate() {
            if d > far.0 && !chosen.contains(&i) {
                far = (d, i);
            }
        }
        chosen.push(far.1);
        for (i, p) in points.rows().into_iter().enumerate() {
            nearest[i] = nearest[i].min(squared_distance(p, points.row(far.1)));
        }
    }
    let mut centroids = Array2::from_shape_fn((k, points.ncols()), |(c, j)| points[[chosen[c], j]]);

    let mut labels = assign(points, &centroids);
    let mut iterations = 0;
    while iterations < MAX_KMEANS_ITERATIONS {
        iterations += 1;
        centroids = means(points, &labels, &centroids);
        let next = assign(points, &centroids);
        if next == labels {
            break;
        }
        labels = next;
    }
    Ok(ClusterAssignment {
        labels,
        centroids,
        iterations,
    })
}
