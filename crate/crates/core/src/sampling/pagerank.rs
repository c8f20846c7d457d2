use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_PAGERANK_ITERATIONS: usize = 1000;

/// Stationary scores of `r ← (1 - d)/n + d Pᵀ r` with `P = D^(-1) W`.
///
/// Vertices without out-edges jump uniformly. Iteration stops once the L1
/// change drops below `tol` or after [`MAX_PAGERANK_ITERATIONS`]. The result
/// sums to one.
pub fn pagerank(g: &Graph, damping: f64, tol: f64) -> Result<Vec<f64>> {
    if !(damping > 0.0 && damping < 1.0) {
        return Err(Error::InvalidProbability(damping));
    }
    let n = g.n();
    let p = g.transition_matrix();
    let dangling: Vec<bool> = g.degrees().iter().map(|&d| d == 0.0).collect();
    let uniform = 1.0 / n as f64;
    let mut r = vec![uniform; n];
    for _ in 0..MAX_PAGERANK_ITERATIONS {
        let leaked: f64 = r
            .iter()
            .zip(&dangling)
            .filter(|(_, &d)| d)
            .map(|(x, _)| x)
            .sum();
        let base = (1.0 - damping) * uniform + damping * leaked * uniform;
        let mut next = vec![base; n];
        for (m, &rm) in r.iter().enumerate() {
            if dangling[m] || rm == 0.0 {
                continue;
            }
            for (k, &pmk) in p.row(m).iter().enumerate() {
                next[k] += damping * pmk * rm;
            }
        }
        let change: f64 = next.iter().zip(&r).map(|(a, b)| (a - b).abs()).sum();
        r = next;
        if change < tol {
            break;
        }
    }
    let total: f64 = r.iter().sum();
    r.iter_mut().for_each(|x| *x /= total);
    Ok(r)
}
