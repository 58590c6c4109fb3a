use thiserror::Error;

/// Errors raised while building, parsing or generating a graph.
///
/// Vertex ids carried by these errors are 1-based, as they appear in input files.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 1")]
    DisconnectedGraph(usize),
    #[error("malformed header at line {line}: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("malformed edge line {line}: {reason}")]
    MalformedEdge { line: usize, reason: String },
    #[error("header declares {declared} edges but {found} distinct edges were read")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("edge budget {m} outside [{min}, {max}] for {n} vertices")]
    EdgeBudgetOutOfRange { n: usize, m: usize, min: usize, max: usize },
}

/// Errors raised by the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("seed solution is not a dominating set")]
    InfeasibleSeed,
    #[error("search budget exhausted after {nodes_visited} nodes")]
    BudgetExhausted { nodes_visited: u64 },
    #[error("alpha must lie strictly between 0 and 1, got {0}")]
    AlphaOutOfRange(f64),
    #[error("all base solutions of this size have been emitted")]
    Exhausted,
    #[error("exhaustive search refused: n = {n} exceeds the guard of {limit}")]
    SizeGuardExceeded { n: usize, limit: usize },
    #[error("no dominating set of size at most {0}")]
    SizeCapReached(usize),
}

/// Top-level error used by the harness and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("manifest line {line}: {reason}")]
    Manifest { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
