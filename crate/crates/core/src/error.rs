use alloc::string::String;

/// Errors raised by graph construction, numerics and the spectral formulas.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("sample point too close to pole ({0})")]
    NearPole(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("bipartite graph is not semiregular")]
    NotSemiregular,
    #[error("closed form requires m >= n (tree-like graph with m = {m}, n = {n})")]
    TreeLike { m: usize, n: usize },
    #[error("eigenvalue iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("eigenvalue residual {residual:e} exceeds {bound:e}")]
    Residual { residual: f64, bound: f64 },
    #[error("spectrum cardinality mismatch: {left} vs {right}")]
    Cardinality { left: usize, right: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
