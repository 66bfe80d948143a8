// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Where a graph6 record went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty record")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the printable range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("byte {offset}: header announces {n} vertices, only n <= 62 is supported")]
    UnsupportedHeader { offset: usize, n: usize },
    #[error("byte {offset}: bit field truncated, expected {expected} data bytes, found {found}")]
    Truncated { offset: usize, expected: usize, found: usize },
    #[error("byte {offset}: {extra} trailing bytes after the bit field")]
    TrailingBytes { offset: usize, extra: usize },
    #[error("byte {offset}: padding bits in the last data byte must be zero")]
    NonZeroPadding { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("invalid edge {u}-{v}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },
    #[error("graph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what} is limited to n <= {limit}, got n = {n}")]
    SizeCap { what: &'static str, limit: usize, n: usize },
    #[error("k = {k} is outside {min}..={n}")]
    InvalidK { k: usize, min: usize, n: usize },
    #[error("vertex set is invalid: {0}")]
    InvalidVertexSet(String),
    #[error("edge set is not a tree")]
    NotATree,
    #[error("graph is not a tree")]
    GraphNotATree,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph has no Hamilton path")]
    NotTraceable,
    #[error("graph is not isomorphic to either variant of a star with two added edges")]
    NotStarPlusPlus,
    #[error("coloring does not fit the graph: {0}")]
    InvalidColoring(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("expected 3 single-edge extensions of the broom for n = {n}, found {found}")]
    VariantCount { n: usize, found: usize },
    #[error("search left the bounds bracket [{lower}, {upper}]: {detail}")]
    BracketViolation { lower: usize, upper: usize, detail: String },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}

impl Error {
    /// True for refusals caused by an input exceeding a solver size cap.
    pub fn is_size_cap(&self) -> bool {
        matches!(self, Error::SizeCap { .. } | Error::TooManyVertices { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
