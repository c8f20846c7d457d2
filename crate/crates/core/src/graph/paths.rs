use std::collections::{BTreeMap, VecDeque};

use ndarray::Array2;
use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// Maximal connected components, each sorted, ordered by smallest member.
/// Directed graphs are treated by their underlying undirected pattern.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let w = g.weights();
    let mut label = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        label[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if label[v] == usize::MAX && (w[[u, v]] > 0.0 || w[[v, u]] > 0.0) {
                    label[v] = id;
                    members.push(v);
                    queue.push_back(v);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

fn require_connected_undirected(g: &Graph) -> Result<()> {
    if g.is_directed() {
        return Err(Error::Directed);
    }
    let components = connected_components(g);
    if components.len() > 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(())
}

fn bfs_hops(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Hop-count distances and the quantities derived from them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Distances {
    #[serde(skip)]
    pub dist: Array2<usize>,
    pub diameter: usize,
    /// `1 / Σ_m dist[n][m]`; zero for a single-vertex graph.
    pub closeness: Vec<f64>,
}

/// All-pairs hop distances by breadth-first search. Edge weights are ignored.
pub fn distances(g: &Graph) -> Result<Distances> {
    require_connected_undirected(g)?;
    let n = g.n();
    let mut dist = Array2::zeros((n, n));
    for s in 0..n {
        for (t, d) in bfs_hops(g, s).into_iter().enumerate() {
            dist[[s, t]] = d;
        }
    }
    let diameter = dist.iter().copied().max().unwrap_or(0);
    let closeness = dist
        .rows()
        .into_iter()
        .map(|row| {
            let farness: usize = row.sum();
            if farness == 0 {
                0.0
            } else {
                1.0 / farness as f64
            }
        })
        .collect();
    Ok(Distances {
        dist,
        diameter,
        closeness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EulerKind {
    None,
    Path,
    Circuit,
}

/// Euler path/circuit existence from the parity of unweighted degrees.
pub fn euler_path_exists(g: &Graph) -> Result<EulerKind> {
    require_connected_undirected(g)?;
    let odd = (0..g.n())
        .filter(|&v| g.neighbors(v).count() % 2 == 1)
        .count();
    Ok(match odd {
        0 => EulerKind::Circuit,
        2 => EulerKind::Path,
        _ => EulerKind::None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Betweenness {
    pub vertex: Vec<f64>,
    /// Keyed by `(m, n)` with `m < n`.
    pub edge: BTreeMap<(usize, usize), f64>,
}

/// Vertex and edge betweenness over unordered vertex pairs, hop-count
/// shortest paths, fractional credit for ties (Brandes accumulation).
pub fn betweenness(g: &Graph) -> Result<Betweenness> {
    require_connected_undirected(g)?;
    let n = g.n();
    let mut vertex = vec![0.0; n];
    let mut edge: BTreeMap<(usize, usize), f64> = g
        .edges()
        .into_iter()
        .map(|(m, k, _)| ((m, k), 0.0))
        .collect();

    for s in 0..n {
        let mut order = Vec::with_capacity(n);
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut sigma = vec![0.0f64; n];
        let mut dist = vec![usize::MAX; n];
        sigma[s] = 1.0;
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        let mut delta = vec![0.0; n];
        for &w in order.iter().rev() {
            for &v in &preds[w] {
                let credit = sigma[v] / sigma[w] * (1.0 + delta[w]);
                *edge.get_mut(&(v.min(w), v.max(w))).expect("edge present") += credit;
                delta[v] += credit;
            }
            if w != s {
                vertex[w] += delta[w];
            }
        }
    }
    // every unordered pair was visited from both ends
    vertex.iter_mut().for_each(|x| *x /= 2.0);
    edge.values_mut().for_each(|x| *x /= 2.0);
    Ok(Betweenness { vertex, edge })
}
