//! File formats: the family JSON document and AQ_n graph exports.
//!
//! Family documents always store zero-based label values
//! (`"labeling": "zero-based-value"`), with endpoints sorted inside each edge
//! and edges sorted inside each tree, so equal families serialize to equal
//! bytes.

use std::fmt::Write as _;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{CistFamily, Provenance};
use crate::topology::{classify_edge, AugmentedCube, Edge, EdgeKindTag, VertexId};
use crate::tree::SpanningTree;

pub const LABELING: &str = "zero-based-value";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeDocument {
    pub id: usize,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub n: u8,
    pub k: usize,
    pub labeling: String,
    pub provenance: Provenance,
    pub trees: Vec<TreeDocument>,
}

impl FamilyDocument {
    pub fn from_family(f: &CistFamily) -> Self {
        FamilyDocument {
            n: f.n(),
            k: f.k(),
            labeling: LABELING.to_string(),
            provenance: f.provenance(),
            trees: f
                .trees()
                .iter()
                .enumerate()
                .map(|(i, t)| TreeDocument {
                    id: i + 1,
                    edges: t.edges().to_vec(),
                })
                .collect(),
        }
    }

    /// Parses and checks the envelope (labeling, `k`, tree ids). The edge
    /// lists themselves are not validated here.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: FamilyDocument =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if doc.labeling != LABELING {
            return Err(Error::Format(format!(
                "unsupported labeling {:?}, expected {LABELING:?}",
                doc.labeling
            )));
        }
        if doc.k != doc.trees.len() {
            return Err(Error::Format(format!(
                "k = {} but {} trees present",
                doc.k,
                doc.trees.len()
            )));
        }
        if doc.trees.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for (i, t) in doc.trees.iter().enumerate() {
            if t.id != i + 1 {
                return Err(Error::Format(format!(
                    "tree ids must be 1..=k in order, found {} at position {}",
                    t.id,
                    i + 1
                )));
            }
        }
        if doc.n < 1 || doc.n > crate::topology::MAX_DIM {
            return Err(Error::Format(format!("dimension {} out of range", doc.n)));
        }
        Ok(doc)
    }

    pub fn edge_lists(&self) -> Vec<Vec<Edge>> {
        self.trees.iter().map(|t| t.edges.clone()).collect()
    }

    /// Builds the family; fails on the first malformed tree.
    pub fn to_family(&self) -> Result<CistFamily> {
        let trees = self
            .trees
            .iter()
            .map(|t| SpanningTree::from_edges(self.n, t.edges.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        CistFamily::new(trees, self.provenance)
    }

    /// Canonical text: one key per line, each tree's edges on one line.
    pub fn to_json(&self) -> String {
        let mut canon = self.clone();
        for t in &mut canon.trees {
            t.edges.sort_unstable();
        }
        let mut s = String::new();
        s.push_str("{\n");
        let _ = writeln!(s, "  \"n\": {},", self.n);
        let _ = writeln!(s, "  \"k\": {},", self.k);
        let _ = writeln!(s, "  \"labeling\": {},", json_str(&self.labeling));
        let _ = writeln!(
            s,
            "  \"provenance\": {},",
            json_str(self.provenance.as_str())
        );
        s.push_str("  \"trees\": [\n");
        for (i, t) in canon.trees.iter().enumerate() {
            s.push_str("    {\n");
            let _ = writeln!(s, "      \"id\": {},", t.id);
            let _ = writeln!(
                s,
                "      \"edges\": {}",
                serde_json::to_string(&t.edges).expect("edges serialize")
            );
            s.push_str(if i + 1 == canon.trees.len() {
                "    }\n"
            } else {
                "    },\n"
            });
        }
        s.push_str("  ]\n}\n");
        s
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

pub fn family_to_json(f: &CistFamily) -> String {
    FamilyDocument::from_family(f).to_json()
}

pub fn family_from_json(text: &str) -> Result<CistFamily> {
    FamilyDocument::parse(text)?.to_family()
}

/// How vertices are rendered in human-facing output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Labels {
    /// Zero-padded binary string, e.g. `00101`.
    #[default]
    Binary,
    /// One-based integer, `00000` is `1`.
    Paper,
}

impl Labels {
    pub fn render(self, v: VertexId) -> String {
        match self {
            Labels::Binary => v.to_binary(),
            Labels::Paper => v.paper_label().to_string(),
        }
    }

    pub fn parse(self, s: &str, n: u8) -> Result<VertexId> {
        match self {
            Labels::Binary => {
                let v = VertexId::from_binary(s)?;
                if v.dim() != n {
                    return Err(Error::DimensionMismatch {
                        left: n,
                        right: v.dim(),
                    });
                }
                Ok(v)
            }
            Labels::Paper => {
                let label: u64 = s.parse().map_err(|_| Error::BadLabel(s.to_string()))?;
                VertexId::from_paper_label(label, n)
            }
        }
    }
}

impl FromStr for Labels {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binary" => Ok(Labels::Binary),
            "paper" => Ok(Labels::Paper),
            other => Err(Error::Format(format!("unknown label convention {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Graphml,
    Edgelist,
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(GraphFormat::Dot),
            "graphml" => Ok(GraphFormat::Graphml),
            "edgelist" => Ok(GraphFormat::Edgelist),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::Format(format!("unsupported format {other:?}"))),
        }
    }
}

#[derive(Serialize)]
struct GraphDocument<'a> {
    n: u8,
    labeling: &'static str,
    vertex_count: u64,
    edge_count: u64,
    edges: &'a [Edge],
}

/// Writes the full edge set of AQ_n, sorted by `(lo, hi)`.
///
/// `edgelist` writes one `u v` line per edge in the chosen label
/// convention. DOT and GraphML node ids are binary strings; GraphML also
/// records each edge's kind. JSON always uses zero-based values.
pub fn write_graph(n: u8, format: GraphFormat, labels: Labels, out: &mut dyn Write) -> Result<()> {
    let cube = AugmentedCube::new(n)?;
    let edges = cube.edges()?;
    let vid = |b: u32| VertexId::new(b, n).expect("in range");
    match format {
        GraphFormat::Edgelist => {
            for e in &edges {
                writeln!(
                    out,
                    "{} {}",
                    labels.render(vid(e.lo())),
                    labels.render(vid(e.hi()))
                )?;
            }
        }
        GraphFormat::Dot => {
            writeln!(out, "graph AQ_{n} {{")?;
            for v in cube.vertices() {
                match labels {
                    Labels::Binary => writeln!(out, "  \"{v}\";")?,
                    Labels::Paper => writeln!(out, "  \"{v}\" [label=\"{}\"];", v.paper_label())?,
                }
            }
            for e in &edges {
                writeln!(out, "  \"{}\" -- \"{}\";", vid(e.lo()), vid(e.hi()))?;
            }
            writeln!(out, "}}")?;
        }
        GraphFormat::Graphml => {
            writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
            writeln!(
                out,
                r#"<graphml xmlns="http://graphml.graphdrawing.org/xmlns">"#
            )?;
            writeln!(
                out,
                r#"  <key id="label" for="node" attr.name="label" attr.type="string"/>"#
            )?;
            writeln!(
                out,
                r#"  <key id="kind" for="edge" attr.name="kind" attr.type="string"/>"#
            )?;
            writeln!(out, r#"  <graph id="AQ_{n}" edgedefault="undirected">"#)?;
            for v in cube.vertices() {
                writeln!(
                    out,
                    r#"    <node id="{v}"><data key="label">{}</data></node>"#,
                    labels.render(v)
                )?;
            }
            for e in &edges {
                let (a, b) = (vid(e.lo()), vid(e.hi()));
                let kind = match classify_edge(a, b)?.kind {
                    EdgeKindTag::Hypercube => "hypercube",
                    EdgeKindTag::Complement => "complement",
                };
                writeln!(
                    out,
                    r#"    <edge source="{a}" target="{b}"><data key="kind">{kind}</data></edge>"#
                )?;
            }
            writeln!(out, "  </graph>")?;
            writeln!(out, "</graphml>")?;
        }
        GraphFormat::Json => {
            let doc = GraphDocument {
                n,
                labeling: LABELING,
                vertex_count: cube.vertex_count(),
                edge_count: cube.edge_count(),
                edges: &edges,
            };
            serde_json::to_writer(&mut *out, &doc).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}
