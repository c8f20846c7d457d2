use std::collections::VecDeque;

use ndarray::Array2;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Residual capacity at or below this is saturated.
const SATURATED: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlowResult {
    pub max_flow: f64,
    /// `(m, n, capacity)` with `m` on the source side.
    pub cut_edges: Vec<(usize, usize, f64)>,
    /// Vertices reachable from the source in the final residual graph.
    pub source_side: Vec<usize>,
    #[serde(skip)]
    pub residual: Array2<f64>,
}

/// Maximum `s → t` flow by shortest augmenting paths (Edmonds–Karp).
///
/// An undirected edge is a pair of opposite arcs with the same capacity. The
/// returned cut consists of the original edges leaving the residual
/// reachability set of `s`.
pub fn max_flow_min_cut(g: &Graph, s: usize, t: usize) -> Result<FlowResult> {
    let n = g.n();
    for index in [s, t] {
        if index >= n {
            return Err(Error::IndexOutOfRange { index, n });
        }
    }
    if s == t {
        return Err(Error::SameVertex);
    }
    let capacity = g.weights();
    let mut residual = capacity.clone();
    let mut max_flow = 0.0;
    let mut parent = vec![usize::MAX; n];

    loop {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for v in 0..n {
                if parent[v] == usize::MAX && residual[[u, v]] > SATURATED {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[t] == usize::MAX {
            break;
        }
        let mut push = f64::INFINITY;
        let mut v = t;
        while v != s {
            let u = parent[v];
            push = push.min(residual[[u, v]]);
            v = u;
        }
        let mut v = t;
        while v != s {
            let u = parent[v];
            residual[[u, v]] -= push;
            residual[[v, u]] += push;
            v = u;
        }
        max_flow += push;
    }

    let reachable: Vec<bool> = parent.iter().map(|&p| p != usize::MAX).collect();
    let source_side: Vec<usize> = (0..n).filter(|&v| reachable[v]).collect();
    let mut cut_edges = Vec::new();
    for &m in &source_side {
        for k in (0..n).filter(|&k| !reachable[k]) {
            let c = capacity[[m, k]];
            if c > 0.0 {
                cut_edges.push((m, k, c));
            }
        }
    }
    Ok(FlowResult {
        max_flow,
        cut_edges,
        source_side,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bottleneck_on_a_path() {
        let g = Graph::new(3, false, &[(0, 1, 0.23), (1, 2, 0.15)]).unwrap();
        let f = max_flow_min_cut(&g, 0, 2).unwrap();
        assert!((f.max_flow - 0.15).abs() < 1e-15);
        assert_eq!(f.cut_edges, vec![(1, 2, 0.15)]);
        assert_eq!(f.source_side, vec![0, 1]);
    }

    #[test]
    fn disconnected_terminals_carry_no_flow() {
        let g = Graph::new(4, false, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let f = max_flow_min_cut(&g, 0, 3).unwrap();
        assert_eq!(f.max_flow, 0.0);
        assert!(f.cut_edges.is_empty());
        assert!(matches!(max_flow_min_cut(&g, 1, 1), Err(Error::SameVertex)));
    }

    #[test]
    fn directed_arcs_respect_orientation() {
        let g = Graph::new(2, true, &[(1, 0, 5.0)]).unwrap();
        assert_eq!(max_flow_min_cut(&g, 0, 1).unwrap().max_flow, 0.0);
        assert_eq!(max_flow_min_cut(&g, 1, 0).unwrap().max_flow, 5.0);
    }
}
