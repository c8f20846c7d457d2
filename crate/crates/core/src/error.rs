use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("edge ({src}, {dst}) has non-positive or non-finite weight {weight}")]
    NonpositiveWeight { src: usize, dst: usize, weight: f64 },

    #[error("invalid weight matrix: {0}")]
    InvalidWeights(String),

    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("graph is disconnected ({} components)", components.len())]
    Disconnected { components: Vec<Vec<usize>> },

    #[error("operation requires an undirected graph")]
    Directed,

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not square: {0} x {1}")]
    NotSquare(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("input of size {n} exceeds the limit of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("vertex set leaves one side of the cut empty")]
    EmptySide,

    #[error("edge expansion needs |E| <= N/2, got |E| = {size} with N = {n}")]
    ExpansionSizeViolation { size: usize, n: usize },

    #[error("source and sink are the same vertex")]
    SameVertex,

    #[error("eigenvalue must be nonnegative, got {0}")]
    NegativeEigenvalue(f64),

    #[error("1/lambda scaling needs a connected graph (lambda_1 = {0})")]
    DisconnectedForScaling(f64),

    #[error("embedding dimension {dim} not in 1..={max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("column {0} is constant, min-max normalization undefined")]
    DegenerateColumn(usize),

    #[error("denominator is zero")]
    ZeroDenominator,

    #[error("expected a single zero eigenvalue, found {0}")]
    MultipleZeroEigenvalues(usize),

    #[error("cluster count {k} not in 1..={n}")]
    InvalidClusterCount { k: usize, n: usize },

    #[error("sample target {target} exceeds vertex count {n}")]
    TargetTooLarge { target: usize, n: usize },

    #[error("probability {0} out of range")]
    InvalidProbability(f64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
