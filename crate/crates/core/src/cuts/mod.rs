//! Graph cuts, their normalized variants and exact solvers.
//!
//! Undirected edges are counted once in every metric. For directed graphs a
//! cut is the total weight of arcs leaving `E`.

mod flow;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use flow::{max_flow_min_cut, FlowResult};

/// Largest graph [`brute_force_min_cut`] accepts.
pub const MAX_BRUTE_FORCE: usize = 22;

/// Cut values closer than this are treated as equal when choosing a minimum.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Disjoint nonempty vertex sets covering the graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Partition {
    pub sets: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    pub volumes: Vec<f64>,
}

impl Partition {
    /// Validates `sets` against `g`; each set is sorted on the way in.
    pub fn new(g: &Graph, sets: Vec<Vec<usize>>) -> Result<Partition> {
        let n = g.n();
        let mut owner = vec![usize::MAX; n];
        let mut sets = sets;
        for (i, set) in sets.iter_mut().enumerate() {
            if set.is_empty() {
                return Err(Error::EmptySide);
            }
            set.sort_unstable();
            for &v in set.iter() {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidSize(format!(
                        "vertex {v} appears in more than one set"
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidSize(format!(
                "vertex {v} is not assigned to any set"
            )));
        }
        let d = g.degrees();
        let sizes = sets.iter().map(Vec::len).collect();
        let volumes = sets.iter().map(|s| s.iter().map(|&v| d[v]).sum()).collect();
        Ok(Partition {
            sets,
            sizes,
            volumes,
        })
    }

    /// `E` and its complement `H`.
    pub fn bipartition(g: &Graph, e_set: &[usize]) -> Result<Partition> {
        let n = g.n();
        let mut inside = vec![false; n];
        for &v in e_set {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
            inside[v] = true;
        }
        let e: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
        let h: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
        if e.is_empty() || h.is_empty() {
            return Err(Error::EmptySide);
        }
        Partition::new(g, vec![e, h])
    }

    pub fn e(&self) -> &[usize] {
        &self.sets[0]
    }

    pub fn h(&self) -> &[usize] {
        &self.sets[1]
    }

    /// Set index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let n = self.sizes.iter().sum();
        let mut labels = vec![0; n];
        for (i, set) in self.sets.iter().enumerate() {
            for &v in set {
                labels[v] = i;
            }
        }
        labels
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutMetric {
    /// `Cut(E, H)`
    Plain,
    /// `Cut · (1/N_E + 1/N_H)`
    Ratio,
    /// `Cut · (1/V_E + 1/V_H)`
    Volume,
    /// `Cut / (N_E · N_H)`
    Sparsity,
    /// `Cut / N_E` with `N_E <= N/2`
    Expansion,
    /// `Cut / min(V_E, V_H)`
    Cheeger,
}

impl CutMetric {
    pub const ALL: [CutMetric; 6] = [
        CutMetric::Plain,
        CutMetric::Ratio,
        CutMetric::Volume,
        CutMetric::Sparsity,
        CutMetric::Expansion,
        CutMetric::Cheeger,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CutMetric::Plain => "plain",
            CutMetric::Ratio => "ratio",
            CutMetric::Volume => "volume",
            CutMetric::Sparsity => "sparsity",
            CutMetric::Expansion => "expansion",
            CutMetric::Cheeger => "cheeger",
        }
    }

    /// Metric from the raw cut and side sizes, `None` when a denominator
    /// vanishes. Expansion always divides by the smaller side.
    fn evaluate(self, cut: f64, ne: usize, nh: usize, ve: f64, vh: f64) -> Option<f64> {
        let (ne, nh) = (ne as f64, nh as f64);
        match self {
            CutMetric::Plain => Some(cut),
            CutMetric::Ratio => Some(cut * (1.0 / ne + 1.0 / nh)),
            CutMetric::Sparsity => Some(cut / (ne * nh)),
            CutMetric::Expansion => Some(cut / ne.min(nh)),
            CutMetric::Volume => (ve > 0.0 && vh > 0.0).then(|| cut * (1.0 / ve + 1.0 / vh)),
            CutMetric::Cheeger => (ve.min(vh) > 0.0).then(|| cut / ve.min(vh)),
        }
    }
}

impl fmt::Display for CutMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CutMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CutMetric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "cut metric",
                name: s.into(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutReport {
    pub partition: Partition,
    pub metric: CutMetric,
    pub value: f64,
    /// Number of bipartitions examined, for the exhaustive solvers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumerated: Option<u64>,
}

fn cross_weight(g: &Graph, inside: &[bool]) -> f64 {
    let w = g.weights();
    let n = g.n();
    let mut total = 0.0;
    for m in (0..n).filter(|&m| inside[m]) {
        for k in (0..n).filter(|&k| !inside[k]) {
            total += w[[m, k]];
        }
    }
    total
}

/// `Σ W_mn` over `m ∈ E`, `n ∉ E`.
pub fn cut_value(g: &Graph, e_set: &[usize]) -> Result<f64> {
    let p = Partition::bipartition(g, e_set)?;
    let mut inside = vec![false; g.n()];
    p.e().iter().for_each(|&v| inside[v] = true);
    Ok(cross_weight(g, &inside))
}

pub fn cut_metric(g: &Graph, e_set: &[usize], metric: CutMetric) -> Result<CutReport> {
    let partition = Partition::bipartition(g, e_set)?;
    let (ne, nh) = (partition.sizes[0], partition.sizes[1]);
    if metric == CutMetric::Expansion && 2 * ne > g.n() {
        return Err(Error::ExpansionSizeViolation { size: ne, n: g.n() });
    }
    let cut = cut_value(g, e_set)?;
    let value = metric
        .evaluate(cut, ne, nh, partition.volumes[0], partition.volumes[1])
        .ok_or(Error::ZeroDenominator)?;
    Ok(CutReport {
        partition,
        metric,
        value,
        enumerated: None,
    })
}

/// Which subset-wise constant vector to build from a bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndicatorKind {
    /// `x(n) = 1/N_E` on `E`, `-1/N_H` on `H`
    Ratio,
    /// `x(n) = 1/V_E` on `E`, `-1/V_H` on `H`
    Volume,
}

/// Indicator vector whose Rayleigh quotient reproduces the ratio cut
/// (against `xᵀx`) or the volume cut (against `xᵀDx`).
pub fn indicator_vector(p: &Partition, kind: IndicatorKind) -> Result<Vec<f64>> {
    if p.sets.len() != 2 {
        return Err(Error::InvalidSize(
            "indicator vectors need a bipartition".into(),
        ));
    }
    let (a, b) = match kind {
        IndicatorKind::Ratio => (p.sizes[0] as f64, p.sizes[1] as f64),
        IndicatorKind::Volume => (p.volumes[0], p.volumes[1]),
    };
    if a == 0.0 || b == 0.0 {
        return Err(Error::ZeroDenominator);
    }
    let mut x = vec![-1.0 / b; p.sizes.iter().sum()];
    p.e().iter().for_each(|&v| x[v] = 1.0 / a);
    Ok(x)
}

fn mask_members(mask: u64, n: usize) -> Vec<usize> {
    // vertex 0 is always in E; bit i-1 of the mask carries vertex i
    std::iter::once(0)
        .chain((1..n).filter(|&i| mask >> (i - 1) & 1 == 1))
        .collect()
}

/// Exact minimizer of `metric` over all `2^(N-1) - 1` bipartitions with
/// vertex 0 in `E`. Among values within [`TIE_TOLERANCE`] of the minimum
/// the lexicographically smallest `E` wins.
pub fn brute_force_min_cut(g: &Graph, metric: CutMetric) -> Result<CutReport> {
    let n = g.n();
    if n > MAX_BRUTE_FORCE {
        return Err(Error::TooLarge {
            n,
            max: MAX_BRUTE_FORCE,
        });
    }
    if n < 2 {
        return Err(Error::EmptySide);
    }
    let d = g.degrees();
    let w = g.weights();
    let full = (1u64 << (n - 1)) - 1;

    let value_of = |mask: u64| -> f64 {
        let inside: Vec<bool> = (0..n).map(|i| i == 0 || mask >> (i - 1) & 1 == 1).collect();
        let ne = inside.iter().filter(|&&b| b).count();
        let mut cut = 0.0;
        let mut ve = 0.0;
        for m in 0..n {
            if inside[m] {
                ve += d[m];
                for k in 0..n {
                    if !inside[k] {
                        cut += w[[m, k]];
                    }
                }
            }
        }
        let vh = d.volume() - ve;
        metric
            .evaluate(cut, ne, n - ne, ve, vh)
            .unwrap_or(f64::INFINITY)
    };

    let best = (0..full)
        .into_par_iter()
        .map(value_of)
        .reduce(|| f64::INFINITY, f64::min);
    if !best.is_finite() {
        return Err(Error::ZeroDenominator);
    }
    let winner = (0..full)
        .into_par_iter()
        .filter(|&mask| value_of(mask) <= best + TIE_TOLERANCE)
        .map(|mask| mask_members(mask, n))
        .reduce_with(|a, b| a.min(b))
        .expect("the minimum is attained");
    let winner_mask = winner
        .iter()
        .skip(1)
        .fold(0u64, |acc, &v| acc | 1 << (v - 1));
    let partition = Partition::bipartition(g, &winner)?;
    Ok(CutReport {
        partition,
        metric,
        value: value_of(winner_mask),
        enumerated: Some(full),
    })
}

/// Best prefix cut `E_p = {order[0..p]}`, `p = 1..N-1`, updated incrementally.
/// Ties go to the smaller `p`.
pub fn sweep_cut(g: &Graph, order: &[usize], metric: CutMetric) -> Result<CutReport> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPermutation(n));
        }
    }
    if n < 2 {
        return Err(Error::EmptySide);
    }
    let w = g.weights();
    let d = g.degrees();
    let total = d.volume();
    let mut inside = vec![false; n];
    let (mut cut, mut ve) = (0.0, 0.0);
    let mut best: Option<(f64, usize)> = None;
    for p in 1..n {
        let v = order[p - 1];
        for u in 0..n {
            if u == v {
                continue;
            }
            if inside[u] {
                cut -= w[[u, v]];
            } else {
                cut += w[[v, u]];
            }
        }
        inside[v] = true;
        ve += d[v];
        let value = metric
            .evaluate(cut.max(0.0), p, n - p, ve, total - ve)
            .unwrap_or(f64::INFINITY);
        if best.is_none_or(|(b, _)| value < b - TIE_TOLERANCE) {
            best = Some((value, p));
        }
    }
    let (_, p) = best.expect("n >= 2");
    let partition = Partition::bipartition(g, &order[..p])?;
    let mut flags = vec![false; n];
    order[..p].iter().for_each(|&v| flags[v] = true);
    let cut = cross_weight(g, &flags);
    let value = metric
        .evaluate(
            cut,
            partition.sizes[0],
            partition.sizes[1],
            partition.volumes[0],
            partition.volumes[1],
        )
        .ok_or(Error::ZeroDenominator)?;
    Ok(CutReport {
        partition,
        metric,
        value,
        enumerated: Some(n as u64 - 1),
    })
}

/// `(λ₁/2, √(2λ₁))`, the bounds on the Cheeger constant. Rounding noise
/// below `-1e-12` is rejected, anything above is clamped to zero.
pub fn cheeger_bounds(lambda1: f64) -> Result<(f64, f64)> {
    if lambda1 < -1e-12 || lambda1.is_nan() {
        return Err(Error::NegativeEigenvalue(lambda1));
    }
    let l = lambda1.max(0.0);
    Ok((l / 2.0, (2.0 * l).sqrt()))
}
