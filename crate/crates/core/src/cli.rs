//! The `spectral-graph` command line.
//!
//! Results go to stdout (JSON, CSV or a graph file), diagnostics to stderr.
//! Exit status is 0 on success, 2 for usage errors and 1 when the
//! computation itself fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ndarray::Array2;
use serde_json::{json, Value};

use crate::cuts::{brute_force_min_cut, max_flow_min_cut, sweep_cut, CutMetric, CutReport};
use crate::embedding::{
    embed, fiedler_bipartition, kmeans_refine, normalize_embedding, sign_clusters, FiedlerVariant,
    Mapping, Normalization, SpectralEmbedding,
};
use crate::error::{Error, Result};
use crate::graph::{
    connected_components, distances, euler_path_exists, graph_product, minimum_spanning_tree,
    walk_counts, Graph, ProductKind,
};
use crate::io::{
    embedding_csv, load_graph, save_graph, to_edge_csv, to_graph_json, GraphFile, GraphFormat,
};
use crate::sampling::{downscale, SampleConfig, SampleMethod};
use crate::spectral::{
    characteristic_polynomial, decompose, graph_matrix, power_method_seeded, MatrixKind,
    MAX_CHARPOLY_SIZE,
};
use crate::DEFAULT_SEED;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "spectral-graph",
    version,
    about = "Spectral analysis of weighted graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Graph file: `.json` is graph JSON, anything else edge CSV.
    graph: PathBuf,
    /// Read edge CSV rows as directed arcs.
    #[arg(long)]
    directed: bool,
}

impl Input {
    fn load(&self) -> Result<Graph> {
        load_graph(&GraphFile::new(&self.graph), self.directed)
    }
}

#[derive(Debug, Args)]
struct Seed {
    /// Random seed.
    #[arg(long, env = "SPECTRAL_GRAPH_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args)]
struct GraphOutput {
    /// Write the graph here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// `csv` or `json`; defaults to the output extension, or JSON on stdout.
    #[arg(long)]
    format: Option<GraphFormat>,
}

impl GraphOutput {
    fn emit(&self, g: &Graph, out: &mut dyn Write) -> Result<()> {
        match &self.output {
            Some(path) => {
                let format = self.format.unwrap_or_else(|| GraphFormat::from_path(path));
                save_graph(
                    g,
                    &GraphFile {
                        format,
                        path: path.clone(),
                    },
                )
            }
            None => {
                let text = match self.format.unwrap_or(GraphFormat::GraphJson) {
                    GraphFormat::EdgeCsv => to_edge_csv(g),
                    GraphFormat::GraphJson => to_graph_json(g) + "\n",
                };
                out.write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Solver {
    /// Exhaustive search over all bipartitions.
    #[arg(long)]
    brute: bool,
    /// Maximum flow between two vertices.
    #[arg(long, num_args = 2, value_names = ["S", "T"])]
    maxflow: Option<Vec<usize>>,
    /// Best prefix of a vertex ordering (Fiedler order by default).
    #[arg(long)]
    sweep: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues of a graph matrix as JSON.
    Spectrum {
        #[command(flatten)]
        input: Input,
        /// adjacency, laplacian, normalized_laplacian, generalized_laplacian or normalized_weight.
        #[arg(long, default_value = "laplacian")]
        variant: MatrixKind,
        /// Include eigenvectors.
        #[arg(long)]
        vectors: bool,
        /// Use the power method for the M largest-magnitude eigenpairs.
        #[arg(long, value_name = "M")]
        power: Option<usize>,
        /// Power-method iteration budget.
        #[arg(long, default_value_t = 200)]
        iters: usize,
        #[command(flatten)]
        seed: Seed,
    },
    /// Spectral clustering as JSON.
    Cluster {
        #[command(flatten)]
        input: Input,
        /// laplacian, generalized or normalized.
        #[arg(long, default_value = "laplacian")]
        variant: String,
        /// Number of clusters.
        #[arg(short, default_value_t = 2)]
        k: usize,
        /// Embedding dimension; defaults to k - 1.
        #[arg(short = 'M')]
        dim: Option<usize>,
        /// Refine with k-means instead of splitting by sign.
        #[arg(long)]
        refine: bool,
        #[command(flatten)]
        seed: Seed,
    },
    /// Minimum cuts as JSON.
    Cut {
        #[command(flatten)]
        input: Input,
        /// plain, ratio, volume, sparsity, expansion or cheeger.
        #[arg(long, default_value = "plain")]
        metric: CutMetric,
        #[command(flatten)]
        solver: Solver,
        /// Vertex order for --sweep, comma separated.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Spectral embedding as CSV.
    Embed {
        #[command(flatten)]
        input: Input,
        /// laplacian, generalized, normalized, commute_time, diffusion or cumulative_diffusion.
        #[arg(long, default_value = "laplacian")]
        map: String,
        /// Embedding dimension.
        #[arg(short = 'M', default_value_t = 2)]
        dim: usize,
        /// Diffusion step.
        #[arg(short = 't', default_value_t = 1)]
        t: u32,
        /// none, unit_norm, sign, sign_mid, minmax (or 0..=4).
        #[arg(long, default_value = "none")]
        norm: Normalization,
        /// Append k-means labels for K clusters.
        #[arg(long, value_name = "K")]
        refine: Option<usize>,
        /// Append colour channels c1..cM in [0, 1].
        #[arg(long)]
        color: bool,
        /// Write the CSV here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        seed: Seed,
    },
    /// Down-scaled graph.
    Sample {
        #[command(flatten)]
        input: Input,
        /// RN, RDN, RPN, RE, RNE, RW, RJ or FF.
        #[arg(long)]
        method: SampleMethod,
        /// Number of vertices to keep.
        #[arg(long)]
        target: usize,
        /// Jump probability for RJ.
        #[arg(long, default_value_t = 0.15)]
        jump: f64,
        /// Forward-burning probability for FF.
        #[arg(long, default_value_t = 0.7)]
        forward: f64,
        #[command(flatten)]
        seed: Seed,
        #[command(flatten)]
        output: GraphOutput,
    },
    /// Kronecker or Cartesian product of two graphs.
    Product {
        /// kronecker or cartesian.
        #[arg(long)]
        kind: ProductKind,
        first: PathBuf,
        second: PathBuf,
        /// Read edge CSV rows as directed arcs.
        #[arg(long)]
        directed: bool,
        #[command(flatten)]
        output: GraphOutput,
    },
    /// Structural properties as JSON.
    Props {
        #[command(flatten)]
        input: Input,
        /// Also report walk counts up to this length.
        #[arg(long, value_name = "K")]
        walks: Option<usize>,
    },
}

/// Runs the command line on `argv` (program name first) with the process
/// stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn print_json(out: &mut dyn Write, value: &Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn fiedler_variant(name: &str) -> Result<FiedlerVariant> {
    match name {
        "laplacian" => Ok(FiedlerVariant::Laplacian),
        "generalized" => Ok(FiedlerVariant::Generalized),
        "normalized" => Ok(FiedlerVariant::Normalized),
        _ => Err(Error::UnknownName {
            kind: "clustering variant",
            name: name.into(),
        }),
    }
}

fn rows(m: &Array2<f64>) -> Vec<Vec<f64>> {
    m.rows().into_iter().map(|r| r.to_vec()).collect()
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match command {
        Command::Spectrum {
            input,
            variant,
            vectors,
            power,
            iters,
            seed,
        } => {
            let g = input.load()?;
            if g.is_directed() {
                return Err(Error::Directed);
            }
            let value = match power {
                Some(m) => {
                    let pairs =
                        power_method_seeded(&graph_matrix(&g, variant)?, m, iters, seed.seed)?;
                    let mut v = json!({
                        "variant": variant.name(),
                        "method": "power",
                        "eigenvalues": pairs.iter().map(|p| p.value).collect::<Vec<_>>(),
                        "residuals": pairs.iter().map(|p| p.residual).collect::<Vec<_>>(),
                        "iterations": pairs.iter().map(|p| p.iterations).collect::<Vec<_>>(),
                    });
                    if vectors {
                        v["eigenvectors"] =
                            json!(pairs.iter().map(|p| p.vector.clone()).collect::<Vec<_>>());
                    }
                    v
                }
                None => {
                    let e = decompose(&g, variant)?;
                    let mut v = json!({
                        "variant": variant.name(),
                        "method": "dense",
                        "eigenvalues": e.eigenvalues.to_vec(),
                    });
                    if vectors {
                        v["eigenvectors"] = json!(rows(&e.eigenvectors.t().to_owned()));
                    }
                    v
                }
            };
            print_json(out, &value)
        }

        Command::Cluster {
            input,
            variant,
            k,
            dim,
            refine,
            seed,
        } => {
            let g = input.load()?;
            let fv = fiedler_variant(&variant)?;
            let (labels, method, iterations) = if k == 2 && !refine && dim.is_none() {
                (fiedler_bipartition(&g, fv)?.labels(), "fiedler", None)
            } else {
                let mapping = Mapping::from_name(&variant, 0)?;
                let e = embed(&g, mapping, dim.unwrap_or(k.saturating_sub(1).max(1)))?;
                if refine {
                    let a = kmeans_refine(&e, k, seed.seed)?;
                    (a.labels, "kmeans", Some(a.iterations))
                } else {
                    (sign_clusters(&e), "sign", None)
                }
            };
            let count = labels.iter().max().map_or(0, |m| m + 1);
            let mut sets = vec![Vec::new(); count];
            labels
                .iter()
                .enumerate()
                .for_each(|(v, &c)| sets[c].push(v));
            print_json(
                out,
                &json!({
                    "variant": variant,
                    "method": method,
                    "k": count,
                    "labels": labels,
                    "sets": sets,
                    "iterations": iterations,
                }),
            )
        }

        Command::Cut {
            input,
            metric,
            solver,
            order,
        } => {
            let g = input.load()?;
            if let Some(st) = solver.maxflow {
                let f = max_flow_min_cut(&g, st[0], st[1])?;
                return print_json(
                    out,
                    &json!({
                        "method": "maxflow",
                        "source": st[0],
                        "sink": st[1],
                        "max_flow": f.max_flow,
                        "cut_edges": f.cut_edges,
                        "source_side": f.source_side,
                    }),
                );
            }
            let (method, report) = if solver.brute {
                ("brute", brute_force_min_cut(&g, metric)?)
            } else {
                let order = match order {
                    Some(o) => o,
                    None => fiedler_order(&g)?,
                };
                ("sweep", sweep_cut(&g, &order, metric)?)
            };
            print_json(out, &cut_json(method, &report))
        }

        Command::Embed {
            input,
            map,
            dim,
            t,
            norm,
            refine,
            color,
            output,
            seed,
        } => {
            let g = input.load()?;
            let raw = embed(&g, Mapping::from_name(&map, t)?, dim)?;
            let e = normalize_embedding(&raw, norm)?;
            let labels = refine
                .map(|k| kmeans_refine(&e, k, seed.seed))
                .transpose()?;
            let mut text = embedding_csv(&e, labels.as_ref());
            if color {
                text = append_colors(&text, &color_channels(&e));
            }
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(())
        }

        Command::Sample {
            input,
            method,
            target,
            jump,
            forward,
            seed,
            output,
        } => {
            let g = input.load()?;
            let mut cfg = SampleConfig::new(method, target).with_seed(seed.seed);
            cfg.rw_jump_prob = jump;
            cfg.ff_forward_prob = forward;
            let s = downscale(&g, &cfg)?;
            writeln!(
                err,
                "kept {} of {} vertices: {:?}",
                s.vertices.len(),
                g.n(),
                s.vertices
            )?;
            output.emit(&s.graph, out)
        }

        Command::Product {
            kind,
            first,
            second,
            directed,
            output,
        } => {
            let g1 = load_graph(&GraphFile::new(first), directed)?;
            let g2 = load_graph(&GraphFile::new(second), directed)?;
            output.emit(&graph_product(&g1, &g2, kind), out)
        }

        Command::Props { input, walks } => {
            let g = input.load()?;
            print_json(out, &props_json(&g, walks)?)
        }
    }
}

/// Vertices sorted by the Fiedler vector of `L`, ties by index.
fn fiedler_order(g: &Graph) -> Result<Vec<usize>> {
    if g.n() < 2 {
        return Err(Error::EmptySide);
    }
    let e = decompose(g, MatrixKind::Laplacian)?;
    let u1 = e.vector(1);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| u1[a].total_cmp(&u1[b]).then(a.cmp(&b)));
    Ok(order)
}

fn cut_json(method: &str, r: &CutReport) -> Value {
    json!({
        "method": method,
        "metric": r.metric.name(),
        "value": r.value,
        "sets": r.partition.sets,
        "sizes": r.partition.sizes,
        "volumes": r.partition.volumes,
        "enumerated": r.enumerated,
    })
}

/// Channels in `[0, 1]`: `(y + 1)/2` for schemes with range `[-1, 1]`, the
/// values themselves for minmax, and a per-column rescale otherwise.
fn color_channels(e: &SpectralEmbedding) -> Array2<f64> {
    match e.normalization {
        Normalization::MinMax => e.coords.clone(),
        Normalization::UnitNorm | Normalization::Sign | Normalization::SignMid => {
            e.coords.mapv(|y| (y + 1.0) / 2.0)
        }
        Normalization::None => match normalize_embedding(e, Normalization::MinMax) {
            Ok(scaled) => scaled.coords,
            Err(_) => {
                let mut c = e.coords.clone();
                for mut col in c.columns_mut() {
                    let lo = col.iter().copied().fold(f64::INFINITY, f64::min);
                    let hi = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                    col.mapv_inplace(|y| if hi > lo { (y - lo) / (hi - lo) } else { 0.5 });
                }
                c
            }
        },
    }
}

fn append_colors(csv: &str, colors: &Array2<f64>) -> String {
    let mut out = String::with_capacity(csv.len() * 2);
    for (i, line) in csv.lines().enumerate() {
        out.push_str(line);
        if i == 0 {
            (1..=colors.ncols()).for_each(|j| out.push_str(&format!(",c{j}")));
        } else {
            colors
                .row(i - 1)
                .iter()
                .for_each(|&c| out.push_str(&format!(",{}", crate::io::format_significant(c))));
        }
        out.push('\n');
    }
    out
}

fn props_json(g: &Graph, walks: Option<usize>) -> Result<Value> {
    let components = connected_components(g);
    let connected_undirected = !g.is_directed() && components.len() == 1;
    let (diameter, closeness, euler, mst) = if connected_undirected {
        let d = distances(g)?;
        let euler = euler_path_exists(g)?;
        let t = minimum_spanning_tree(g)?;
        (
            json!(d.diameter),
            json!(d.closeness),
            json!(euler),
            json!({ "cost": t.cost, "edges": t.edges }),
        )
    } else {
        (Value::Null, Value::Null, Value::Null, Value::Null)
    };
    let adjacency_poly = if g.n() <= MAX_CHARPOLY_SIZE {
        json!(characteristic_polynomial(&g.adjacency())?.coefficients)
    } else {
        Value::Null
    };
    let laplacian_poly = if g.n() <= MAX_CHARPOLY_SIZE && !g.is_directed() {
        json!(
            characteristic_polynomial(&g.laplacian(&crate::graph::LaplacianVariant::Standard)?)?
                .coefficients
        )
    } else {
        Value::Null
    };
    let mut v = json!({
        "n": g.n(),
        "directed": g.is_directed(),
        "edge_count": g.edge_count(),
        "volume": g.volume(),
        "degrees": g.degrees().values(),
        "components": components,
        "diameter": diameter,
        "closeness": closeness,
        "euler": euler,
        "mst": mst,
        "adjacency_char_poly": adjacency_poly,
        "laplacian_char_poly": laplacian_poly,
    });
    if let Some(k) = walks {
        let w = walk_counts(g, k)?;
        v["walks"] = json!({ "k": k, "exact": rows(&w.exact), "cumulative": rows(&w.cumulative) });
    }
    Ok(v)
}
