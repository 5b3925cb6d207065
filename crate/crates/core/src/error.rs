use thiserror::Error;

/// Errors raised by the construction and checking routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Schreier spec: {0}")]
    InvalidSpec(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("label multiset is not closed under inverses: {0}")]
    NotSymmetric(String),

    #[error("graphs do not commute: {0}")]
    NonCommuting(String),

    #[error("graphs have {count} overlapping vertex pair(s), first {first:?}")]
    OverlappingEdges { count: usize, first: (usize, usize) },

    #[error("not bipartite on the given partition: {0}")]
    NotBipartite(String),

    #[error("degree mismatch: {a} vs {b}")]
    DegreeMismatch { a: usize, b: usize },

    #[error("inverse-pair labels are incompatible: {0}")]
    PairingIncompatible(String),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("not a CSS pair: h0 * h1^T has {0} nonzero entries")]
    NotCss(usize),

    #[error("enumeration budget exceeded: dimension {dim} > cap {cap}")]
    Budget { dim: usize, cap: usize },

    #[error("condition (ii) fails at v={v}, w={w}")]
    ConditionIi { v: usize, w: usize },

    #[error("swapping condition fails on edge {0}")]
    SwappingCondition(usize),

    #[error("reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
