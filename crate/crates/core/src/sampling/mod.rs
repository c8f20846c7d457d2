//! Graph down-scaling by random vertex, edge and exploration sampling.
//!
//! Every vertex-driven method returns the induced subgraph on the selected
//! vertices, listed in ascending order. All randomness comes from a ChaCha
//! generator seeded by [`SampleConfig::seed`].

mod pagerank;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};
use crate::DEFAULT_SEED;

pub use pagerank::{pagerank, MAX_PAGERANK_ITERATIONS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SampleMethod {
    /// Uniform vertices without replacement.
    Rn,
    /// Vertices proportional to degree, without replacement.
    Rdn,
    /// Vertices proportional to PageRank, without replacement.
    Rpn,
    /// Uniform edges; keeps their endpoints.
    Re,
    /// Uniform vertex, then a uniform edge at it.
    Rne,
    /// Random walk.
    Rw,
    /// Random walk with uniform jumps.
    Rj,
    /// Forest-fire burning.
    Ff,
}

impl SampleMethod {
    pub const ALL: [SampleMethod; 8] = [
        SampleMethod::Rn,
        SampleMethod::Rdn,
        SampleMethod::Rpn,
        SampleMethod::Re,
        SampleMethod::Rne,
        SampleMethod::Rw,
        SampleMethod::Rj,
        SampleMethod::Ff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SampleMethod::Rn => "RN",
            SampleMethod::Rdn => "RDN",
            SampleMethod::Rpn => "RPN",
            SampleMethod::Re => "RE",
            SampleMethod::Rne => "RNE",
            SampleMethod::Rw => "RW",
            SampleMethod::Rj => "RJ",
            SampleMethod::Ff => "FF",
        }
    }
}

impl fmt::Display for SampleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Case-insensitive method name.
impl FromStr for SampleMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SampleMethod::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName {
                kind: "sampling method",
                name: s.into(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub method: SampleMethod,
    pub target: usize,
    pub seed: u64,
    /// Per-step jump probability for RJ.
    pub rw_jump_prob: f64,
    /// Burning probability for FF; the number of neighbours burnt per vertex
    /// is geometric with mean `p / (1 - p)`.
    pub ff_forward_prob: f64,
}

impl SampleConfig {
    pub fn new(method: SampleMethod, target: usize) -> Self {
        SampleConfig {
            method,
            target,
            seed: DEFAULT_SEED,
            rw_jump_prob: 0.15,
            ff_forward_prob: 0.7,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.target > n {
            return Err(Error::TargetTooLarge {
                target: self.target,
                n,
            });
        }
        if self.target == 0 {
            return Err(Error::InvalidSize(
                "sample target must be at least 1".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.rw_jump_prob) {
            return Err(Error::InvalidProbability(self.rw_jump_prob));
        }
        if !(self.ff_forward_prob > 0.0 && self.ff_forward_prob < 1.0) {
            return Err(Error::InvalidProbability(self.ff_forward_prob));
        }
        Ok(())
    }
}

/// A down-scaled graph and the original indices of its vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    /// Ascending; vertex `i` of `graph` is `vertices[i]` of the input.
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Samples `cfg.target` vertices and returns their induced subgraph. RE
/// stops at the first edge that reaches the target and may overshoot by
/// one, or fall short when the edges run out.
pub fn downscale(g: &Graph, cfg: &SampleConfig) -> Result<Sample> {
    let n = g.n();
    cfg.validate(n)?;
    if matches!(
        cfg.method,
        SampleMethod::Rw | SampleMethod::Rj | SampleMethod::Ff
    ) && g.is_directed()
    {
        return Err(Error::Directed);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let target = cfg.target;
    let chosen: BTreeSet<usize> = match cfg.method {
        SampleMethod::Rn => rand::seq::index::sample(&mut rng, n, target)
            .into_iter()
            .collect(),
        SampleMethod::Rdn => weighted_without_replacement(&mut rng, g.degrees().values(), target),
        SampleMethod::Rpn => {
            weighted_without_replacement(&mut rng, &pagerank(g, 0.85, 1e-12)?, target)
        }
        SampleMethod::Re => random_edges(&mut rng, g, target)?,
        SampleMethod::Rne => random_vertex_edges(&mut rng, g, target),
        SampleMethod::Rw => random_walk(&mut rng, g, target, 0.0),
        SampleMethod::Rj => random_walk(&mut rng, g, target, cfg.rw_jump_prob),
        SampleMethod::Ff => forest_fire(&mut rng, g, target, cfg.ff_forward_prob),
    };
    let vertices: Vec<usize> = chosen.into_iter().collect();
    let graph = g.induced_subgraph(&vertices)?;
    Ok(Sample { vertices, graph })
}

/// Successive draws proportional to `weights` among the remaining items;
/// uniform once the remaining weight is zero.
fn weighted_without_replacement(
    rng: &mut ChaCha8Rng,
    weights: &[f64],
    count: usize,
) -> BTreeSet<usize> {
    let mut remaining: Vec<usize> = (0..weights.len()).collect();
    let mut out = BTreeSet::new();
    while out.len() < count {
        let w: Vec<f64> = remaining.iter().map(|&i| weights[i]).collect();
        let pick = match WeightedIndex::new(&w) {
            Ok(dist) => dist.sample(rng),
            Err(_) => rng.gen_range(0..remaining.len()),
        };
        out.insert(remaining.swap_remove(pick));
    }
    out
}

fn random_edges(rng: &mut ChaCha8Rng, g: &Graph, target: usize) -> Result<BTreeSet<usize>> {
    let mut edges = g.edges();
    if edges.is_empty() {
        return Err(Error::InvalidSize(
            "random edge sampling needs at least one edge".into(),
        ));
    }
    edges.shuffle(rng);
    let mut out = BTreeSet::new();
    for (m, k, _) in edges {
        if out.len() >= target {
            break;
        }
        out.insert(m);
        out.insert(k);
    }
    Ok(out)
}

fn random_vertex_edges(rng: &mut ChaCha8Rng, g: &Graph, target: usize) -> BTreeSet<usize> {
    let n = g.n();
    let mut out = BTreeSet::new();
    while out.len() < target {
        let v = rng.gen_range(0..n);
        out.insert(v);
        let incident: Vec<usize> = g.neighbors(v).collect();
        if out.len() < target {
            if let Some(&u) = incident.choose(rng) {
                out.insert(u);
            }
        }
    }
    out
}

/// Weighted walk; with probability `jump` a step goes to a uniform vertex
/// instead. A walk trapped in a fully visited component restarts at a
/// uniform unvisited vertex.
fn random_walk(rng: &mut ChaCha8Rng, g: &Graph, target: usize, jump: f64) -> BTreeSet<usize> {
    let n = g.n();
    let components = connected_components(g);
    let mut component_of = vec![0; n];
    for (c, members) in components.iter().enumerate() {
        members.iter().for_each(|&v| component_of[v] = c);
    }
    let mut unvisited_in = components.iter().map(Vec::len).collect::<Vec<_>>();
    let w = g.weights();

    let mut out = BTreeSet::new();
    let mut current = rng.gen_range(0..n);
    out.insert(current);
    unvisited_in[component_of[current]] -= 1;
    while out.len() < target {
        current = if unvisited_in[component_of[current]] == 0 {
            let fresh: Vec<usize> = (0..n).filter(|v| !out.contains(v)).collect();
            *fresh.choose(rng).expect("target <= n")
        } else if jump > 0.0 && rng.gen_bool(jump) {
            rng.gen_range(0..n)
        } else {
            let dist = WeightedIndex::new(w.row(current).iter())
                .expect("an unexhausted component has edges");
            dist.sample(rng)
        };
        if out.insert(current) {
            unvisited_in[component_of[current]] -= 1;
        }
    }
    out
}

fn forest_fire(rng: &mut ChaCha8Rng, g: &Graph, target: usize, forward: f64) -> BTreeSet<usize> {
    let n = g.n();
    let mut burnt = BTreeSet::new();
    while burnt.len() < target {
        let fresh: Vec<usize> = (0..n).filter(|v| !burnt.contains(v)).collect();
        let start = *fresh.choose(rng).expect("target <= n");
        burnt.insert(start);
        let mut front = VecDeque::from([start]);
        while let Some(v) = front.pop_front() {
            if burnt.len() >= target {
                break;
            }
            let mut spread = 0;
            while rng.gen_bool(forward) {
                spread += 1;
            }
            let mut candidates: Vec<usize> =
                g.neighbors(v).filter(|u| !burnt.contains(u)).collect();
            candidates.shuffle(rng);
            for u in candidates.into_iter().take(spread) {
                if burnt.len() >= target {
                    break;
                }
                burnt.insert(u);
                front.push_back(u);
            }
        }
    }
    burnt
}
