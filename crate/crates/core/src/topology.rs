//! The augmented cube AQ_n.
//!
//! A vertex is an n-bit label `u_1 u_2 ... u_n` stored as an integer with
//! `u_1` as the most significant bit, so `00000` is value 0 and paper label 1.
//! Two labels are adjacent when they differ in exactly one bit, or when they
//! agree on a prefix `u_1..u_{k-1}` and differ on every bit of the suffix
//! `u_k..u_n`. Adjacency is computed from the labels; the recursive doubling
//! construction in [`build_recursive`] exists as an independent oracle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest dimension a [`VertexId`] can carry.
pub const MAX_DIM: u8 = 30;

/// Largest dimension for which the explicit edge set is built.
pub const MAX_EXPLICIT_DIM: u8 = 20;

/// An n-bit vertex label of AQ_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    bits: u32,
    dim: u8,
}

impl VertexId {
    pub fn new(bits: u32, dim: u8) -> Result<Self> {
        check_dim(dim as u32, 1, MAX_DIM)?;
        if (bits as u64) >> dim != 0 {
            return Err(Error::LabelOutOfRange {
                value: bits as u64,
                dim,
            });
        }
        Ok(VertexId { bits, dim })
    }

    pub(crate) fn from_raw(bits: u32, dim: u8) -> Self {
        debug_assert!((bits as u64) >> dim == 0);
        VertexId { bits, dim }
    }

    /// Parses a binary string such as `"01001"`; its length is the dimension.
    pub fn from_binary(s: &str) -> Result<Self> {
        let dim = s.len();
        if dim == 0 || dim > MAX_DIM as usize || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::BadLabel(s.to_string()));
        }
        let bits = u32::from_str_radix(s, 2).map_err(|_| Error::BadLabel(s.to_string()))?;
        VertexId::new(bits, dim as u8)
    }

    /// Converts a one-based paper label (`00000` is `1`) into a vertex.
    pub fn from_paper_label(label: u64, dim: u8) -> Result<Self> {
        if label == 0 {
            return Err(Error::LabelOutOfRange { value: 0, dim });
        }
        let value = label - 1;
        if value > u32::MAX as u64 {
            return Err(Error::LabelOutOfRange { value, dim });
        }
        VertexId::new(value as u32, dim)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn dim(self) -> u8 {
        self.dim
    }

    /// One-based paper label.
    pub fn paper_label(self) -> u64 {
        self.bits as u64 + 1
    }

    pub fn to_binary(self) -> String {
        format!("{:0width$b}", self.bits, width = self.dim as usize)
    }

    /// The label `b·self` in dimension `dim + 1`.
    pub fn prefixed(self, bit: bool) -> Result<Self> {
        let dim = self.dim + 1;
        check_dim(dim as u32, 1, MAX_DIM)?;
        Ok(VertexId {
            bits: ((bit as u32) << self.dim) | self.bits,
            dim,
        })
    }

    /// Bit `u_k` for `1 <= k <= dim`.
    pub fn bit(self, k: u8) -> bool {
        assert!(k >= 1 && k <= self.dim);
        (self.bits >> (self.dim - k)) & 1 == 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary())
    }
}

/// Serialized as its binary string.
impl Serialize for VertexId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_binary())
    }
}

/// An undirected edge between two label values, stored with the smaller
/// endpoint first. Serialized as a two-element array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 2]", into = "[u32; 2]")]
pub struct Edge(u32, u32);

impl Edge {
    pub fn new(a: u32, b: u32) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn lo(self) -> u32 {
        self.0
    }

    pub fn hi(self) -> u32 {
        self.1
    }

    pub fn other(self, v: u32) -> u32 {
        if v == self.0 {
            self.1
        } else {
            self.0
        }
    }

    pub fn contains(self, v: u32) -> bool {
        self.0 == v || self.1 == v
    }

    /// Edge built from one-based paper labels.
    pub fn from_paper(a: u32, b: u32) -> Self {
        Edge::new(a - 1, b - 1)
    }
}

impl From<[u32; 2]> for Edge {
    fn from(p: [u32; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl From<Edge> for [u32; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl From<(u32, u32)> for Edge {
    fn from(p: (u32, u32)) -> Self {
        Edge::new(p.0, p.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.0, self.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeKindTag {
    Hypercube,
    Complement,
}

/// Classification of an AQ_n edge: which rule joins it, and at which
/// one-based bit position `k` the labels first differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeKind {
    pub kind: EdgeKindTag,
    pub split_dim: u8,
}

impl EdgeKind {
    /// The neighbor of `u` reached through an edge of this kind.
    pub fn apply(self, u: VertexId) -> VertexId {
        let n = u.dim();
        let shift = n - self.split_dim;
        let mask = match self.kind {
            EdgeKindTag::Hypercube => 1u32 << shift,
            EdgeKindTag::Complement => ((1u64 << (shift + 1)) - 1) as u32,
        };
        VertexId::from_raw(u.bits() ^ mask, n)
    }
}

fn check_dim(n: u32, min: u8, max: u8) -> Result<()> {
    if n < min as u32 || n > max as u32 {
        return Err(Error::DimensionOutOfRange {
            n,
            min: min as u32,
            max: max as u32,
        });
    }
    Ok(())
}

/// Adjacency on raw label values. `x = a ^ b` must be a single bit or a
/// run of ones ending at the least significant bit.
#[inline]
pub fn adjacent_values(a: u32, b: u32) -> bool {
    let x = a ^ b;
    x != 0 && (x & x.wrapping_sub(1) == 0 || x & x.wrapping_add(1) == 0)
}

fn same_dim(u: VertexId, v: VertexId) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(())
}

pub fn are_adjacent(u: VertexId, v: VertexId) -> Result<bool> {
    same_dim(u, v)?;
    Ok(adjacent_values(u.bits(), v.bits()))
}

/// Neighbor values of `u` in AQ_n, ascending. Always `2n - 1` entries.
pub fn neighbor_values(u: u32, n: u8) -> Vec<u32> {
    let mut out = Vec::with_capacity(2 * n as usize - 1);
    for p in 0..n {
        out.push(u ^ (1 << p));
    }
    // suffix complements of length >= 2
    for len in 2..=n as u32 {
        out.push(u ^ (((1u64 << len) - 1) as u32));
    }
    out.sort_unstable();
    out
}

pub fn neighbors(u: VertexId) -> Vec<VertexId> {
    neighbor_values(u.bits(), u.dim())
        .into_iter()
        .map(|b| VertexId::from_raw(b, u.dim()))
        .collect()
}

/// Classifies the edge `<u, v>`. A last-bit flip satisfies both joining
/// rules and is reported as a hypercube edge, so the hypercube edges form
/// exactly Q_n.
pub fn classify_edge(u: VertexId, v: VertexId) -> Result<EdgeKind> {
    same_dim(u, v)?;
    let n = u.dim();
    let x = u.bits() ^ v.bits();
    if !adjacent_values(u.bits(), v.bits()) {
        return Err(Error::NotAdjacent {
            u: u.bits(),
            v: v.bits(),
            n,
        });
    }
    if x.count_ones() == 1 {
        let p = x.trailing_zeros() as u8;
        Ok(EdgeKind {
            kind: EdgeKindTag::Hypercube,
            split_dim: n - p,
        })
    } else {
        let len = x.count_ones() as u8;
        Ok(EdgeKind {
            kind: EdgeKindTag::Complement,
            split_dim: n - len + 1,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub degree: u32,
}

pub fn graph_stats(n: u8) -> Result<GraphStats> {
    let cube = AugmentedCube::new(n)?;
    Ok(GraphStats {
        vertex_count: cube.vertex_count(),
        edge_count: cube.edge_count(),
        degree: cube.degree(),
    })
}

/// AQ_n answered from the closed-form adjacency rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AugmentedCube {
    n: u8,
    edge_count: u64,
}

impl AugmentedCube {
    pub fn new(n: u8) -> Result<Self> {
        check_dim(n as u32, 1, MAX_DIM)?;
        let edge_count = (1u64 << (n - 1)) * (2 * n as u64 - 1);
        Ok(AugmentedCube { n, edge_count })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn vertex_count(&self) -> u64 {
        1u64 << self.n
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn degree(&self) -> u32 {
        2 * self.n as u32 - 1
    }

    pub fn vertex(&self, bits: u32) -> Result<VertexId> {
        VertexId::new(bits, self.n)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        let n = self.n;
        (0..(1u64 << n)).map(move |b| VertexId::from_raw(b as u32, n))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        (e.hi() as u64) < self.vertex_count() && adjacent_values(e.lo(), e.hi())
    }

    /// All edges sorted by `(lo, hi)`.
    pub fn edges(&self) -> Result<Vec<Edge>> {
        check_dim(self.n as u32, 1, MAX_EXPLICIT_DIM)?;
        let mut out = Vec::with_capacity(self.edge_count as usize);
        for u in 0..(1u32 << self.n) {
            for v in neighbor_values(u, self.n) {
                if v > u {
                    out.push(Edge::new(u, v));
                }
            }
        }
        Ok(out)
    }
}

/// Edge set of AQ_n built by recursive doubling: two prefixed copies of
/// AQ_{n-1} joined by the hypercube edges `0s - 1s` and the complement
/// edges `0s - 1s'`. Sorted by `(lo, hi)`.
pub fn build_recursive(n: u8) -> Result<Vec<Edge>> {
    check_dim(n as u32, 1, MAX_EXPLICIT_DIM)?;
    let mut edges = vec![Edge::new(0, 1)];
    for m in 2..=n {
        let half = 1u32 << (m - 1);
        let mask = half - 1;
        let mut next = Vec::with_capacity(edges.len() * 2 + 2 * half as usize);
        next.extend(edges.iter().copied());
        next.extend(
            edges
                .iter()
                .map(|e| Edge::new(e.lo() | half, e.hi() | half)),
        );
        for u in 0..half {
            next.push(Edge::new(u, u | half));
            next.push(Edge::new(u, (!u & mask) | half));
        }
        edges = next;
    }
    edges.sort_unstable();
    Ok(edges)
}
