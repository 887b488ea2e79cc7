use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    #[error("{n} vertices exceeds the limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at {u}-{v}")]
    Asymmetric { u: usize, v: usize },
    #[error("adjacency row over {found} vertices in a graph on {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("{u}-{v} is already an edge")]
    AlreadyAnEdge { u: usize, v: usize },
    #[error("induced subgraph on the empty vertex set")]
    EmptySubgraph,
    #[error("clique size for a lexicographic product must be at least 1")]
    ZeroCliqueSize,
    #[error("disjoint union of no graphs")]
    EmptyUnion,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the printable graph6 range")]
    InvalidByte { byte: u8, offset: usize },
    #[error("malformed vertex-count prefix")]
    MalformedLength,
    #[error("graph6 encodes zero vertices")]
    ZeroVertices,
    #[error("{n} vertices exceeds the implementation cap of {limit}")]
    TooManyVertices { n: u64, limit: usize },
    #[error("adjacency data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} trailing bytes after the adjacency data")]
    TrailingGarbage { extra: usize },
    #[error("nonzero padding bits in the last adjacency byte")]
    NonZeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndependenceError {
    #[error("vertex set is not independent")]
    NotIndependent,
    #[error("expected an independent set of size {expected}, found {found}")]
    WrongSize { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WpError {
    #[error("exhaustive W_p oracle limited to {limit} vertices, graph has {n}")]
    SizeGuard { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SaturationError {
    #[error("vertex set is not a clique")]
    NotAClique,
    #[error("expected a clique of size {expected}, found {found}")]
    WrongSize { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("malformed parameter `{0}`")]
    MalformedParameter(String),
    #[error("family `{family}` is missing parameter `{param}`")]
    MissingParameter { family: String, param: String },
    #[error("family `{family}` does not take parameter `{param}`")]
    UnexpectedParameter { family: String, param: String },
    #[error("invalid parameters for `{family}`: {reason}")]
    InvalidParameters { family: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
