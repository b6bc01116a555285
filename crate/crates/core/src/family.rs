//! Ordered families of spanning trees on one AQ_n.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topology::{Edge, VertexId};
use crate::tree::SpanningTree;

/// Where a family came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    PaperTable,
    PaperFigure,
    Search,
    Lifted,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::PaperTable => "paper-table",
            Provenance::PaperFigure => "paper-figure",
            Provenance::Search => "search",
            Provenance::Lifted => "lifted",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-table" => Ok(Provenance::PaperTable),
            "paper-figure" => Ok(Provenance::PaperFigure),
            "search" => Ok(Provenance::Search),
            "lifted" => Ok(Provenance::Lifted),
            other => Err(Error::Format(format!("unknown provenance {other:?}"))),
        }
    }
}

/// `k` spanning trees of the same AQ_n, in order. Each tree is individually
/// valid; whether they are CISTs is decided by [`crate::verification`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CistFamily {
    n: u8,
    trees: Vec<SpanningTree>,
    provenance: Provenance,
}

impl CistFamily {
    pub fn new(trees: Vec<SpanningTree>, provenance: Provenance) -> Result<Self> {
        let first = trees.first().ok_or(Error::EmptyFamily)?;
        let n = first.n();
        if let Some(t) = trees.iter().find(|t| t.n() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: t.n(),
            });
        }
        Ok(CistFamily {
            n,
            trees,
            provenance,
        })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.trees.len()
    }

    pub fn trees(&self) -> &[SpanningTree] {
        &self.trees
    }

    pub fn tree(&self, i: usize) -> &SpanningTree {
        &self.trees[i]
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn diameters(&self) -> Vec<u32> {
        self.trees.iter().map(SpanningTree::diameter).collect()
    }

    /// The raw edge lists, for verification and serialization.
    pub fn edge_lists(&self) -> Vec<Vec<Edge>> {
        self.trees.iter().map(|t| t.edges().to_vec()).collect()
    }

    pub fn into_trees(self) -> Vec<SpanningTree> {
        self.trees
    }
}

/// Per-tree summary row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeStats {
    pub id: usize,
    pub edge_count: usize,
    pub diameter: u32,
    pub radius: u32,
    pub center: VertexId,
    pub internal_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyStats {
    pub n: u8,
    pub trees: Vec<TreeStats>,
    pub edge_disjoint: bool,
    pub internal_disjoint: bool,
}

pub fn family_stats(f: &CistFamily) -> FamilyStats {
    let trees = f
        .trees()
        .iter()
        .enumerate()
        .map(|(i, t)| TreeStats {
            id: i + 1,
            edge_count: t.edges().len(),
            diameter: t.diameter(),
            radius: t.radius(),
            center: t.center(),
            internal_count: t.internal_values().len(),
        })
        .collect();
    let size = 1usize << f.n();
    let mut edges: Vec<Edge> = f
        .trees()
        .iter()
        .flat_map(|t| t.edges().iter().copied())
        .collect();
    let total = edges.len();
    edges.sort_unstable();
    edges.dedup();
    let mut internal_owners = vec![0u32; size];
    for t in f.trees() {
        for v in t.internal_values() {
            internal_owners[v as usize] += 1;
        }
    }
    FamilyStats {
        n: f.n(),
        trees,
        edge_disjoint: edges.len() == total,
        internal_disjoint: internal_owners.iter().all(|&c| c <= 1),
    }
}
