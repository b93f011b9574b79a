use alloc::string::String;

use crate::classes::ClassId;

/// Errors raised by graph construction, transformations, solvers and reductions.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex not in graph: {vertex} (graph has {n} vertices)")]
    VertexNotInGraph { vertex: usize, n: usize },
    #[error("graph too large: {n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("exhaustive enumeration supports 1 <= n <= 6 (got {0}); use sample_graph for larger graphs")]
    EnumerationBound(usize),
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("R undefined for degree > 3 (vertex {vertex} has degree {degree})")]
    NotSubcubic { vertex: usize, degree: usize },
    #[error("not a K-image: weight {weight} on pair {u}-{v}")]
    NotKImage { u: usize, v: usize, weight: String },
    #[error("weighted graph is missing the weight of pair {0}-{1}")]
    IncompleteWeights(usize, usize),
    #[error("negative weight {weight} on pair {u}-{v}")]
    NegativeWeight { u: usize, v: usize, weight: String },
    #[error("root search bound exceeded: component with {size} vertices (bound {bound})")]
    RootSearchBound { size: usize, bound: usize },
    #[error("no root generator for class {0}")]
    NoRootGenerator(ClassId),
    #[error("class {class} expects a {expected} graph")]
    ClassTypeMismatch { class: ClassId, expected: &'static str },
    #[error("{solver} supports at most {cap} vertices (got {n})")]
    SizeCap { solver: &'static str, cap: usize, n: usize },
    #[error("malformed instance: expected {0}")]
    InstanceShape(&'static str),
    #[error("not in reduction image: {0}")]
    NotInImage(&'static str),
    #[error("graph is not a member of class {0}")]
    NotMember(ClassId),
    #[error("class {0} is not registered as a source class of this reduction")]
    UnregisteredClass(ClassId),
    #[error("image class {0} rejected the transformed member")]
    ImageContainment(ClassId),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
