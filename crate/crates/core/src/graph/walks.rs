use std::collections::VecDeque;

use ndarray::Array2;

use super::Graph;
use crate::error::{Error, Result};

/// Walk counts on the binarized adjacency matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkCounts {
    /// `A^K`: walks of length exactly `K`.
    pub exact: Array2<f64>,
    /// `A + A^2 + ... + A^K`: walks of length at most `K`.
    pub cumulative: Array2<f64>,
}

/// Counts walks of length `K` and up to `K`. Counts are exact while they
/// stay below 2^53.
pub fn walk_counts(g: &Graph, k: usize) -> Result<WalkCounts> {
    if k == 0 {
        return Err(Error::InvalidSize("walk length must be at least 1".into()));
    }
    let a = g.adjacency();
    let mut exact = a.clone();
    let mut cumulative = a.clone();
    for _ in 1..k {
        exact = exact.dot(&a);
        cumulative += &exact;
    }
    Ok(WalkCounts { exact, cumulative })
}

/// Vertices reachable from `v` by a walk of length at most `K`, plus `v`
/// itself. Sorted ascending.
pub fn k_neighborhood(g: &Graph, v: usize, k: usize) -> Result<Vec<usize>> {
    let n = g.n();
    if v >= n {
        return Err(Error::IndexOutOfRange { index: v, n });
    }
    let mut depth = vec![usize::MAX; n];
    depth[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        if depth[u] == k {
            continue;
        }
        for w in g.neighbors(u) {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok((0..n).filter(|&u| depth[u] != usize::MAX).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_equal_one_is_adjacency() {
        let g = Graph::new(3, false, &[(0, 1, 0.5), (1, 2, 2.0)]).unwrap();
        let w = walk_counts(&g, 1).unwrap();
        assert_eq!(w.exact, g.adjacency());
        assert_eq!(w.cumulative, g.adjacency());
        assert!(walk_counts(&g, 0).is_err());
    }

    #[test]
    fn zero_neighborhood_is_seed() {
        let g = Graph::new(3, false, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        assert_eq!(k_neighborhood(&g, 1, 0).unwrap(), vec![1]);
        assert_eq!(k_neighborhood(&g, 0, 1).unwrap(), vec![0, 1]);
        assert!(k_neighborhood(&g, 3, 1).is_err());
    }
}
