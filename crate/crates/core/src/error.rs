use thiserror::Error;

use crate::graph::Edge;

/// Errors produced by graph construction, parsing and the algorithms that
/// have preconditions on their input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {}-{} references a vertex outside 0..{n}", .edge.0, .edge.1)]
    VertexOutOfRange { edge: Edge, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {}-{}", .0.0, .0.1)]
    DuplicateEdge(Edge),
    #[error("duplicate arc {}->{}", .0.0, .0.1)]
    DuplicateArc(Edge),
    #[error("edge {}-{} is not in the graph", .0.0, .0.1)]
    MissingEdge(Edge),
    #[error("vertex {0} is not in the graph")]
    MissingVertex(usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("bipartition is unbalanced ({left} vs {right})")]
    Unbalanced { left: usize, right: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("edge set is not a perfect matching of the host graph")]
    NotAPerfectMatching,
    #[error("factors belong to different host graphs")]
    HostMismatch,
    #[error("vertex {vertex} has degree {found}, expected {expected}")]
    Degree {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("edge {}-{} is not pseudo loyal", .0.0, .0.1)]
    NotPseudoLoyal(Edge),
    #[error("not an edge cut: {0}")]
    NotAnEdgeCut(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error("no adjacency data available for catalog key `{0}`")]
    NoData(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("digraph text, line {line}: {reason}")]
    DigraphText { line: usize, reason: String },
    #[error("{what} exceeds the supported size ({limit})")]
    TooLarge { what: &'static str, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
