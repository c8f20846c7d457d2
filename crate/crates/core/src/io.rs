//! Graph and embedding files.
//!
//! * edge CSV: header `src,dst,weight`, one edge per line, 0-based vertices.
//!   The vertex count is one more than the largest index.
//! * graph JSON: `{"n": 8, "directed": false, "edges": [[0, 1, 0.23], ...]}`.
//! * embedding CSV: header `vertex,q1,...,qM[,cluster]`.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::embedding::{ClusterAssignment, SpectralEmbedding};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const EDGE_CSV_HEADER: &str = "src,dst,weight";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFormat {
    EdgeCsv,
    GraphJson,
}

impl GraphFormat {
    /// `.json` files are graph JSON, everything else edge CSV.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => GraphFormat::GraphJson,
            _ => GraphFormat::EdgeCsv,
        }
    }
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" | "edge_csv" => Ok(GraphFormat::EdgeCsv),
            "json" | "graph_json" => Ok(GraphFormat::GraphJson),
            _ => Err(Error::UnknownName {
                kind: "graph format",
                name: s.into(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub format: GraphFormat,
    pub path: PathBuf,
}

impl GraphFile {
    pub fn new(path: impl Into<PathBuf>) -> GraphFile {
        let path = path.into();
        GraphFile {
            format: GraphFormat::from_path(&path),
            path,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    directed: bool,
    edges: Vec<(usize, usize, f64)>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses edge CSV. Graph invariant violations are reported as parse errors
/// on the offending line. Blank lines are skipped.
pub fn parse_edge_csv(text: &str, directed: bool) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, header)) if header.replace(' ', "") == EDGE_CSV_HEADER => {}
        Some((line, other)) => {
            return Err(parse_error(
                line,
                format!("expected header `{EDGE_CSV_HEADER}`, found `{other}`"),
            ))
        }
        None => return Err(parse_error(1, "empty file")),
    }
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut max_index = None;
    for (line, text) in lines {
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(parse_error(
                line,
                format!("expected 3 fields, found {}", fields.len()),
            ));
        }
        let vertex = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_error(line, format!("bad vertex index `{s}`")))
        };
        let (src, dst) = (vertex(fields[0])?, vertex(fields[1])?);
        let weight: f64 = fields[2]
            .parse()
            .map_err(|_| parse_error(line, format!("bad weight `{}`", fields[2])))?;
        if src == dst {
            return Err(parse_error(line, Error::SelfLoop(src).to_string()));
        }
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(parse_error(
                line,
                Error::NonpositiveWeight { src, dst, weight }.to_string(),
            ));
        }
        let key = if directed {
            (src, dst)
        } else {
            (src.min(dst), src.max(dst))
        };
        if !seen.insert(key) {
            return Err(parse_error(
                line,
                Error::DuplicateEdge(src, dst).to_string(),
            ));
        }
        max_index = max_index.max(Some(src.max(dst)));
        edges.push((src, dst, weight));
    }
    let n = max_index.map_or(0, |m| m + 1);
    if n == 0 {
        return Err(parse_error(1, "no edges"));
    }
    Graph::new(n, directed, &edges)
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let file: GraphJson = serde_json::from_str(text)?;
    Graph::new(file.n, file.directed, &file.edges)
}

/// Edge CSV text; undirected edges appear once with `src < dst`. Weights use
/// the shortest representation that parses back to the same value.
pub fn to_edge_csv(g: &Graph) -> String {
    let mut out = format!("{EDGE_CSV_HEADER}\n");
    for (m, k, w) in g.edges() {
        out.push_str(&format!("{m},{k},{w:?}\n"));
    }
    out
}

pub fn to_graph_json(g: &Graph) -> String {
    let file = GraphJson {
        n: g.n(),
        directed: g.is_directed(),
        edges: g.edges(),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

/// Loads a graph. `directed` applies to edge CSV; graph JSON declares it.
pub fn load_graph(file: &GraphFile, directed: bool) -> Result<Graph> {
    let text = fs::read_to_string(&file.path)?;
    match file.format {
        GraphFormat::EdgeCsv => parse_edge_csv(&text, directed),
        GraphFormat::GraphJson => parse_graph_json(&text),
    }
}

pub fn save_graph(g: &Graph, file: &GraphFile) -> Result<()> {
    let text = match file.format {
        GraphFormat::EdgeCsv => to_edge_csv(g),
        GraphFormat::GraphJson => to_graph_json(g) + "\n",
    };
    fs::write(&file.path, text)?;
    Ok(())
}

/// `x` rounded to 12 significant digits, printed as briefly as possible.
pub fn format_significant(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    format!("{rounded}")
}

/// Embedding CSV text, optionally with a trailing cluster column.
pub fn embedding_csv(e: &SpectralEmbedding, labels: Option<&ClusterAssignment>) -> String {
    let mut header = vec!["vertex".to_string()];
    header.extend((1..=e.dim()).map(|j| format!("q{j}")));
    if labels.is_some() {
        header.push("cluster".into());
    }
    let mut out = header.join(",") + "\n";
    for (v, row) in e.coords.rows().into_iter().enumerate() {
        let mut fields = vec![v.to_string()];
        fields.extend(row.iter().map(|&x| format_significant(x)));
        if let Some(a) = labels {
            fields.push(a.labels[v].to_string());
        }
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn save_embedding(
    e: &SpectralEmbedding,
    labels: Option<&ClusterAssignment>,
    path: &Path,
) -> Result<()> {
    fs::write(path, embedding_csv(e, labels))?;
    Ok(())
}

/// Coordinates and optional cluster labels from embedding CSV text.
pub fn parse_embedding_csv(text: &str) -> Result<(Array2<f64>, Option<Vec<usize>>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| parse_error(1, "empty file"))?;
    let columns: Vec<&str> = header.split(',').collect();
    let clustered = columns.last() == Some(&"cluster");
    let dim = columns.len() - 1 - usize::from(clustered);
    if columns.first() != Some(&"vertex") || dim == 0 {
        return Err(parse_error(1, format!("unexpected header `{header}`")));
    }
    let mut coords = Vec::new();
    let mut labels = Vec::new();
    for (row, (line, text)) in lines.enumerate() {
        let fields: Vec<&str> = text.split(',').collect();
        if fields.len() != columns.len() {
            return Err(parse_error(
                line,
                format!("expected {} fields, found {}", columns.len(), fields.len()),
            ));
        }
        if fields[0].parse::<usize>().ok() != Some(row) {
            return Err(parse_error(
                line,
                format!("expected vertex {row}, found `{}`", fields[0]),
            ));
        }
        for f in &fields[1..=dim] {
            coords.push(
                f.parse::<f64>()
                    .map_err(|_| parse_error(line, format!("bad coordinate `{f}`")))?,
            );
        }
        if clustered {
            let f = fields[dim + 1];
            labels.push(
                f.parse::<usize>()
                    .map_err(|_| parse_error(line, format!("bad cluster `{f}`")))?,
            );
        }
    }
    let n = coords.len() / dim;
    let coords = Array2::from_shape_vec((n, dim), coords).expect("row lengths checked");
    Ok((coords, clustered.then_some(labels)))
}

pub fn load_embedding(path: &Path) -> Result<(Array2<f64>, Option<Vec<usize>>)> {
    parse_embedding_csv(&fs::read_to_string(path)?)
}
