use thiserror::Error;

use crate::topology::Edge;

/// Errors produced by the library.
///
/// Vertex values in messages are zero-based label values, not paper labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {n} outside supported range {min}..={max}")]
    DimensionOutOfRange { n: u32, min: u32, max: u32 },

    #[error("vertex value {value} does not fit in {dim} bits")]
    LabelOutOfRange { value: u64, dim: u8 },

    #[error("cannot parse vertex label {0:?}")]
    BadLabel(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u8, right: u8 },

    #[error("vertices {u} and {v} are not adjacent in AQ_{n}")]
    NotAdjacent { u: u32, v: u32, n: u8 },

    #[error("edge {edge} is not an edge of AQ_{n}")]
    NonAqEdge { edge: Edge, n: u8 },

    #[error("tree has {found} edges, a spanning tree of AQ_{n} has {expected}")]
    TooManyEdges {
        found: usize,
        expected: usize,
        n: u8,
    },

    #[error("edge {edge} closes a cycle")]
    Cycle { edge: Edge },

    #[error("vertex {vertex} is not connected to vertex 0")]
    Disconnected { vertex: u32 },

    #[error("tree diameter {diameter} is below 2; no internal vertex to connect")]
    DegenerateTree { diameter: u32 },

    #[error("no base family for n = {n}; use construct_cists for n >= 6")]
    UnsupportedBase { n: u8 },

    #[error("CIST construction needs n >= 3, got {n}")]
    Unsupported { n: u32 },

    #[error("family must hold at least one tree")]
    EmptyFamily,

    #[error("family is not a set of CISTs: {0}")]
    NotCist(String),

    #[error("brute-force verification is capped at n = {cap}, got {n}; use characterization mode")]
    BruteForceCap { n: u8, cap: u8 },

    #[error("source and destination are the same vertex {0}")]
    SameEndpoints(u32),

    #[error(
        "verifier modes disagree: characterization {characterization}, brute force {brute_force}"
    )]
    ModeDisagreement {
        characterization: bool,
        brute_force: bool,
    },

    #[error("family file: {0}")]
    Format(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
