//! Fixtures and independent reference implementations shared by the
//! integration tests. Nothing here calls into the solvers under test.

#![allow(dead_code)]

use ndarray::Array2;
use proptest::prelude::*;
use spectral_graph::Graph;

pub const WEIGHTED8_EDGES: [(usize, usize, f64); 12] = [
    (0, 1, 0.23),
    (0, 2, 0.74),
    (0, 3, 0.24),
    (1, 2, 0.35),
    (1, 4, 0.23),
    (2, 3, 0.26),
    (2, 4, 0.24),
    (3, 6, 0.32),
    (4, 5, 0.51),
    (4, 7, 0.14),
    (5, 7, 0.15),
    (6, 7, 0.32),
];

pub const UNWEIGHTED8_EDGES: [(usize, usize); 12] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 6),
    (4, 5),
    (4, 7),
    (5, 7),
    (6, 7),
];

pub const TWO_COMPONENT8_EDGES: [(usize, usize); 9] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (2, 3),
    (4, 5),
    (4, 7),
    (5, 7),
    (6, 7),
];

/// Eight vertices, twelve weighted edges, two loosely coupled groups.
pub fn weighted8() -> Graph {
    Graph::new(8, false, &WEIGHTED8_EDGES).unwrap()
}

/// The same pattern with unit weights.
pub fn unweighted8() -> Graph {
    let edges: Vec<_> = UNWEIGHTED8_EDGES
        .iter()
        .map(|&(m, n)| (m, n, 1.0))
        .collect();
    Graph::new(8, false, &edges).unwrap()
}

/// Two components, {0,1,2,3} and {4,5,6,7}.
pub fn two_component8() -> Graph {
    let edges: Vec<_> = TWO_COMPONENT8_EDGES
        .iter()
        .map(|&(m, n)| (m, n, 1.0))
        .collect();
    Graph::new(8, false, &edges).unwrap()
}

pub fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{what}: got {got}, want {want} ± {tol}"
    );
}

pub fn assert_all_close(got: &[f64], want: &[f64], tol: f64, what: &str) {
    assert_eq!(got.len(), want.len(), "{what}: length");
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        assert!(
            (g - w).abs() <= tol,
            "{what}[{i}]: got {g}, want {w} ± {tol}\n got {got:?}\nwant {want:?}"
        );
    }
}

/// Flips `v` so its largest-magnitude entry is positive.
pub fn sign_aligned(v: &[f64]) -> Vec<f64> {
    let lead = v.iter().enumerate().fold(0, |best, (i, x)| {
        if x.abs() > v[best].abs() + 1e-12 {
            i
        } else {
            best
        }
    });
    if v[lead] < 0.0 {
        v.iter().map(|x| -x).collect()
    } else {
        v.to_vec()
    }
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi eigensolver.

/// Ascending eigenvalues and column eigenvectors of a symmetric matrix by
/// cyclic Jacobi rotations.
pub fn jacobi_eigen(m: &Array2<f64>) -> (Vec<f64>, Array2<f64>) {
    let n = m.nrows();
    let mut a = m.clone();
    let mut v = Array2::<f64>::eye(n);
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| a[[i, j]].powi(2))
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[[p, q]].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[[q, q]] - a[[p, p]]) / (2.0 * a[[p, q]]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[[k, p]], a[[k, q]]);
                    a[[k, p]] = c * akp - s * akq;
                    a[[k, q]] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[[p, k]], a[[q, k]]);
                    a[[p, k]] = c * apk - s * aqk;
                    a[[q, k]] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[[k, p]], v[[k, q]]);
                    v[[k, p]] = c * vkp - s * vkq;
                    v[[k, q]] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[[i, i]].total_cmp(&a[[j, j]]));
    let values = order.iter().map(|&i| a[[i, i]]).collect();
    let vectors = Array2::from_shape_fn((n, n), |(r, c)| v[[r, order[c]]]);
    (values, vectors)
}

pub fn jacobi_eigenvalues(m: &Array2<f64>) -> Vec<f64> {
    jacobi_eigen(m).0
}

/// `D - W` written out directly.
pub fn laplacian_oracle(w: &Array2<f64>) -> Array2<f64> {
    let n = w.nrows();
    Array2::from_shape_fn((n, n), |(i, j)| {
        if i == j {
            w.row(i).sum() - w[[i, i]]
        } else {
            -w[[i, j]]
        }
    })
}

// ---------------------------------------------------------------------------
// Combinatorial oracles.

/// Number of walks of length exactly `k` from `s` to `t` by depth-first
/// enumeration on the 0/1 pattern of `w`.
pub fn enumerate_walks(w: &Array2<f64>, s: usize, t: usize, k: usize) -> u64 {
    if k == 0 {
        return u64::from(s == t);
    }
    (0..w.nrows())
        .filter(|&u| w[[s, u]] > 0.0)
        .map(|u| enumerate_walks(w, u, t, k - 1))
        .sum()
}

/// Every spanning tree of an undirected graph as edge-index subsets, found by
/// trying all `(n-1)`-subsets of the edge list.
pub fn spanning_trees(n: usize, edges: &[(usize, usize, f64)]) -> Vec<Vec<usize>> {
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut out = Vec::new();
    let e = edges.len();
    let mut chosen = Vec::new();
    fn rec(
        start: usize,
        e: usize,
        n: usize,
        edges: &[(usize, usize, f64)],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == n - 1 {
            let mut p: Vec<usize> = (0..n).collect();
            for &i in chosen.iter() {
                let (a, b) = (find(&mut p, edges[i].0), find(&mut p, edges[i].1));
                if a == b {
                    return;
                }
                p[a] = b;
            }
            out.push(chosen.clone());
            return;
        }
        for i in start..e {
            chosen.push(i);
            rec(i + 1, e, n, edges, chosen, out);
            chosen.pop();
        }
    }
    rec(0, e, n, edges, &mut chosen, &mut out);
    out
}

/// Minimum `s`–`t` cut over every bipartition with `s` on one side and `t`
/// on the other (cut = weight leaving the `s` side).
pub fn brute_st_cut(w: &Array2<f64>, s: usize, t: usize) -> f64 {
    let n = w.nrows();
    let mut best = f64::INFINITY;
    for mask in 0u32..(1 << n) {
        let inside = |v: usize| mask >> v & 1 == 1;
        if !inside(s) || inside(t) {
            continue;
        }
        let mut cut = 0.0;
        for m in (0..n).filter(|&m| inside(m)) {
            for k in (0..n).filter(|&k| !inside(k)) {
                cut += w[[m, k]];
            }
        }
        best = best.min(cut);
    }
    best
}

/// Every bipartition `(E, H)` of `0..n` with both sides nonempty, each listed once.
pub fn bipartitions(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    (1u32..(1 << n) - 1)
        .filter(|mask| mask & 1 == 1)
        .map(|mask| {
            let e = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let h = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            (e, h)
        })
        .collect()
}

/// Plain cut weight between `e` and its complement.
pub fn cut_oracle(w: &Array2<f64>, e: &[usize]) -> f64 {
    let n = w.nrows();
    let inside: Vec<bool> = (0..n).map(|v| e.contains(&v)).collect();
    let mut cut = 0.0;
    for m in 0..n {
        for k in 0..n {
            if inside[m] && !inside[k] {
                cut += w[[m, k]];
            }
        }
    }
    cut
}

/// Smallest k-means objective over every assignment of the rows of `points`
/// to `k` nonempty clusters.
pub fn exhaustive_kmeans_objective(points: &Array2<f64>, k: usize) -> f64 {
    let n = points.nrows();
    let mut labels = vec![0usize; n];
    let mut best = f64::INFINITY;
    loop {
        let mut counts = vec![0usize; k];
        labels.iter().for_each(|&l| counts[l] += 1);
        if counts.iter().all(|&c| c > 0) {
            let mut total = 0.0;
            for c in 0..k {
                let members: Vec<usize> = (0..n).filter(|&i| labels[i] == c).collect();
                for j in 0..points.ncols() {
                    let mean =
                        members.iter().map(|&i| points[[i, j]]).sum::<f64>() / members.len() as f64;
                    total += members
                        .iter()
                        .map(|&i| (points[[i, j]] - mean).powi(2))
                        .sum::<f64>();
                }
            }
            best = best.min(total);
        }
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            labels[i] += 1;
            if labels[i] < k {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
pub fn solve(mut a: Array2<f64>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[[i, col]].abs().total_cmp(&a[[j, col]].abs()))
            .unwrap();
        for j in 0..n {
            a.swap([col, j], [pivot, j]);
        }
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[[row, col]] / a[[col, col]];
            for j in col..n {
                a[[row, j]] -= f * a[[col, j]];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|j| a[[row, j]] * x[j]).sum();
        x[row] = (b[row] - s) / a[[row, row]];
    }
    x
}

/// PageRank as the solution of `(I - d Pᵀ) r = (1 - d)/n · 1` on a graph
/// without dangling vertices.
pub fn pagerank_oracle(w: &Array2<f64>, damping: f64) -> Vec<f64> {
    let n = w.nrows();
    let a = Array2::from_shape_fn((n, n), |(i, j)| {
        let d_j = w.row(j).sum();
        let p_ji = w[[j, i]] / d_j;
        f64::from(u8::from(i == j)) - damping * p_ji
    });
    solve(a, vec![(1.0 - damping) / n as f64; n])
}

// ---------------------------------------------------------------------------
// Random graphs.

/// Undirected graph on `n` vertices where each pair is an edge with
/// probability `density` and weight in `[0.05, 1]`.
pub fn random_graph(n: usize, density: f64, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for m in 0..n {
        for k in m + 1..n {
            if rng.gen_bool(density) {
                edges.push((m, k, rng.gen_range(0.05..=1.0)));
            }
        }
    }
    Graph::new(n, false, &edges).unwrap()
}

/// Random graph made connected by a random spanning path laid underneath.
pub fn random_connected_graph(n: usize, density: f64, seed: u64) -> Graph {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let g = random_graph(n, density, seed);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut w = g.weights().clone();
    for pair in order.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if w[[a, b]] == 0.0 {
            w[[a, b]] = 0.5;
            w[[b, a]] = 0.5;
        }
    }
    Graph::from_weights(w, false).unwrap()
}

/// Proptest strategy over random undirected graphs with `2..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, density, seed)| random_graph(n, density, seed))
}

pub fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, density, seed)| random_connected_graph(n, density, seed))
}
