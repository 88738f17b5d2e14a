use alloc::string::String;

use crate::graph::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {0} is not part of the graph")]
    UnknownVertex(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("poles must be distinct, got {0} twice")]
    IdenticalPoles(Vertex),
    #[error("graph has {size} vertices, more than the bound of {bound}")]
    SizeBoundExceeded { size: usize, bound: usize },
    #[error("graph has {size} vertices, more than the oracle bound of {bound}")]
    OracleBoundExceeded { size: usize, bound: usize },
    #[error("region is not valid for this graph: {0}")]
    InvalidRegion(&'static str),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("embedding does not match the graph: {0}")]
    EmbeddingMismatch(&'static str),
    #[error("set does not dominate vertex {0}")]
    NotDominating(Vertex),
    #[error("graph is not bipartite with the given parts: {0}")]
    NotBipartite(&'static str),
    #[error("bipartite parts must both be nonempty")]
    EmptyPart,
    #[error("graph has {0} vertices; at least two are needed")]
    TooSmallGraph(usize),
    #[error("not a split partition: {0}")]
    InvalidSplitPartition(&'static str),
    #[error("independent vertex {0} has no clique neighbor")]
    NoCliqueNeighbor(Vertex),
    #[error("decomposition needs at least three base vertices, got {0}")]
    BaseSetTooSmall(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
