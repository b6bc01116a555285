//! Spanning trees of AQ_n and the tree queries the construction relies on.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::topology::{adjacent_values, Edge, VertexId, MAX_DIM};

/// A validated spanning tree of AQ_n.
///
/// Edges are kept sorted; adjacency is stored in compressed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    n: u8,
    edges: Vec<Edge>,
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

/// The unique path between two vertices of a tree, source first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreePath {
    pub vertices: Vec<VertexId>,
}

impl TreePath {
    /// Number of edges on the path.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices
            .windows(2)
            .map(|w| Edge::new(w[0].bits(), w[1].bits()))
    }

    /// Vertices strictly between the endpoints.
    pub fn interior(&self) -> &[VertexId] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn reversed(&self) -> TreePath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        TreePath { vertices }
    }
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size as u32).collect(),
            rank: vec![0; size],
        }
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    pub(crate) fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (ra, rb) = if self.rank[ra as usize] < self.rank[rb as usize] {
            (rb, ra)
        } else {
            (ra, rb)
        };
        self.parent[rb as usize] = ra;
        if self.rank[ra as usize] == self.rank[rb as usize] {
            self.rank[ra as usize] += 1;
        }
        true
    }
}

impl SpanningTree {
    /// Validates `edges` as a spanning tree of AQ_n.
    ///
    /// Checks run in a fixed order so the reported witness is deterministic:
    /// label range, AQ_n membership, edge count upper bound, acyclicity (first
    /// edge in sorted order that closes a cycle), then connectivity (smallest
    /// vertex not connected to 0).
    pub fn from_edges<I, E>(n: u8, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        if !(1..=MAX_DIM).contains(&n) {
            return Err(Error::DimensionOutOfRange {
                n: n as u32,
                min: 1,
                max: MAX_DIM as u32,
            });
        }
        let size = 1usize << n;
        let mut edges: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        edges.sort_unstable();
        for &e in &edges {
            if e.hi() as usize >= size {
                return Err(Error::LabelOutOfRange {
                    value: e.hi() as u64,
                    dim: n,
                });
            }
            if !adjacent_values(e.lo(), e.hi()) {
                return Err(Error::NonAqEdge { edge: e, n });
            }
        }
        if edges.len() > size - 1 {
            return Err(Error::TooManyEdges {
                found: edges.len(),
                expected: size - 1,
                n,
            });
        }
        let mut uf = UnionFind::new(size);
        for &e in &edges {
            if !uf.union(e.lo(), e.hi()) {
                return Err(Error::Cycle { edge: e });
            }
        }
        let root = uf.find(0);
        if let Some(v) = (1..size as u32).find(|&v| uf.find(v) != root) {
            return Err(Error::Disconnected { vertex: v });
        }
        Ok(Self::from_sorted_unchecked(n, edges))
    }

    /// Builds the tree without validation. `edges` must be sorted and form a
    /// spanning tree of AQ_n.
    pub(crate) fn from_sorted_unchecked(n: u8, edges: Vec<Edge>) -> Self {
        let size = 1usize << n;
        debug_assert_eq!(edges.len(), size - 1);
        let mut degree = vec![0u32; size + 1];
        for e in &edges {
            degree[e.lo() as usize + 1] += 1;
            degree[e.hi() as usize + 1] += 1;
        }
        for i in 1..=size {
            degree[i] += degree[i - 1];
        }
        let offsets = degree;
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; 2 * edges.len()];
        for e in &edges {
            targets[fill[e.lo() as usize] as usize] = e.hi();
            fill[e.lo() as usize] += 1;
            targets[fill[e.hi() as usize] as usize] = e.lo();
            fill[e.hi() as usize] += 1;
        }
        SpanningTree {
            n,
            edges,
            offsets,
            targets,
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        1usize << self.n
    }

    /// Sorted edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Neighbors of the vertex with value `v` in the tree.
    pub fn neighbors_of(&self, v: u32) -> &[u32] {
        let (a, b) = (
            self.offsets[v as usize] as usize,
            self.offsets[v as usize + 1] as usize,
        );
        &self.targets[a..b]
    }

    pub fn degree_of(&self, v: u32) -> usize {
        (self.offsets[v as usize + 1] - self.offsets[v as usize]) as usize
    }

    pub fn is_internal(&self, v: u32) -> bool {
        self.degree_of(v) >= 2
    }

    fn check_vertex(&self, u: VertexId) -> Result<()> {
        if u.dim() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: u.dim(),
            });
        }
        Ok(())
    }

    /// Breadth-first search from `source`. Returns `(distance, parent)`
    /// arrays; the parent of `source` is itself.
    pub fn bfs(&self, source: u32) -> (Vec<u32>, Vec<u32>) {
        let size = self.vertex_count();
        let mut dist = vec![u32::MAX; size];
        let mut parent = vec![u32::MAX; size];
        let mut queue = VecDeque::with_capacity(size);
        dist[source as usize] = 0;
        parent[source as usize] = source;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors_of(x) {
                if dist[y as usize] == u32::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    parent[y as usize] = x;
                    queue.push_back(y);
                }
            }
        }
        (dist, parent)
    }

    /// Path values from `u` to `v`.
    pub fn path_values(&self, u: u32, v: u32) -> Vec<u32> {
        let (_, parent) = self.bfs(v);
        let mut out = vec![u];
        let mut x = u;
        while x != v {
            x = parent[x as usize];
            out.push(x);
        }
        out
    }

    pub fn path(&self, u: VertexId, v: VertexId) -> Result<TreePath> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let vertices = self
            .path_values(u.bits(), v.bits())
            .into_iter()
            .map(|b| VertexId::from_raw(b, self.n))
            .collect();
        Ok(TreePath { vertices })
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<u32> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs(u.bits()).0[v.bits() as usize])
    }

    fn eccentricity_value(&self, u: u32) -> u32 {
        self.bfs(u).0.into_iter().max().unwrap_or(0)
    }

    pub fn eccentricity(&self, u: VertexId) -> Result<u32> {
        self.check_vertex(u)?;
        Ok(self.eccentricity_value(u.bits()))
    }

    fn farthest_from(&self, u: u32) -> (u32, Vec<u32>) {
        let (dist, parent) = self.bfs(u);
        // smallest label among the farthest vertices
        let (far, _) =
            dist.iter().enumerate().fold(
                (0usize, 0u32),
                |best, (i, &d)| if d > best.1 { (i, d) } else { best },
            );
        (far as u32, parent)
    }

    /// A longest path, found by two farthest-vertex searches.
    pub fn diameter_path(&self) -> Vec<u32> {
        let (a, _) = self.farthest_from(0);
        let (b, parent) = self.farthest_from(a);
        let mut path = vec![b];
        let mut x = b;
        while x != a {
            x = parent[x as usize];
            path.push(x);
        }
        path
    }

    pub fn diameter(&self) -> u32 {
        self.diameter_path().len() as u32 - 1
    }

    /// Minimum eccentricity, `ceil(diameter / 2)`.
    pub fn radius(&self) -> u32 {
        self.diameter().div_ceil(2)
    }

    /// The center vertex; of two adjacent centers the smaller label wins.
    pub fn center(&self) -> VertexId {
        let path = self.diameter_path();
        let d = path.len() - 1;
        let c = if d.is_multiple_of(2) {
            path[d / 2]
        } else {
            path[d / 2].min(path[d / 2 + 1])
        };
        VertexId::from_raw(c, self.n)
    }

    pub fn internal_values(&self) -> Vec<u32> {
        (0..self.vertex_count() as u32)
            .filter(|&v| self.is_internal(v))
            .collect()
    }

    /// Vertices of tree degree at least 2, ascending.
    pub fn internal_vertices(&self) -> Vec<VertexId> {
        self.internal_values()
            .into_iter()
            .map(|b| VertexId::from_raw(b, self.n))
            .collect()
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.vertex_count() as u32)
            .filter(|&v| self.degree_of(v) == 1)
            .count()
    }
}
