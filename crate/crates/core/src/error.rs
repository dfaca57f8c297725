use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex label {0} is listed more than once")]
    DuplicateLabel(Vertex),
    #[error("vertex labels must be positive integers, got {0}")]
    InvalidLabel(Vertex),
    #[error("edge {{{0}, {1}}} has an endpoint that is not a listed vertex")]
    UnknownEndpoint(Vertex, Vertex),
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("edge {{{0}, {1}}} is listed more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {0} is not in the vertex set")]
    UnknownVertex(Vertex),

    #[error("a simplicial complex needs at least one facet")]
    EmptyInput,
    #[error("{0:?} is not a facet of the complex")]
    NotAFacet(Vec<Vertex>),
    #[error("facet order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("complex is not pure")]
    NotPure,
    #[error("certificate does not match the complex: {0}")]
    CertificateMismatch(String),

    #[error("parts do not partition the base vertex set: {0}")]
    PartsNotPartition(String),
    #[error("part {0:?} is not a clique of the base graph")]
    PartNotClique(Vec<Vertex>),
    #[error("whisker set {0} is empty")]
    EmptyWhiskerSet(usize),
    #[error("whisker label {0} collides with another vertex")]
    LabelCollision(Vertex),
    #[error("{parts} parts but {whiskers} whisker sets")]
    ArityMismatch { parts: usize, whiskers: usize },
    #[error("canonical order failed the shelling condition at pair ({i}, {j})")]
    CanonicalOrderNotShelling { i: usize, j: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
