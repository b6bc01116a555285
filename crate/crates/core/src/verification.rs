//! Deciding whether a family of trees is a set of completely independent
//! spanning trees.
//!
//! Two independent routes are provided:
//!
//! * **characterization**: the trees are pairwise edge-disjoint spanning
//!   trees and every vertex has degree greater than one in at most one tree.
//! * **brute force**: for every vertex pair and every pair of trees, the two
//!   tree paths share no vertex other than the endpoints and no edge.
//!
//! Both routes start with the same structural checks (every tree is an
//! acyclic, spanning subgraph of AQ_n) and both check edge-disjointness,
//! which is part of the definition. Checks run cheap to expensive and stop
//! at the first violation; later checks are reported as skipped. Every
//! failure carries a witness. Tree ids in witnesses are one-based; vertex
//! values are zero-based.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::CistFamily;
use crate::topology::{adjacent_values, Edge, MAX_DIM};
use crate::tree::{SpanningTree, UnionFind};

/// Default largest n accepted by the brute-force verifier.
pub const DEFAULT_BRUTEFORCE_MAX_N: u8 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Characterization,
    BruteForce,
    Both,
}

impl Mode {
    /// `Both` when brute force is within `cap`, else `Characterization`.
    pub fn default_for(n: u8, cap: u8) -> Mode {
        if n <= cap {
            Mode::Both
        } else {
            Mode::Characterization
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    Subgraph,
    Acyclic,
    Spanning,
    EdgeDisjoint,
    InternalOverlap,
    PathVertexIntersection,
    PathEdgeIntersection,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Subgraph => "subgraph",
            Condition::Acyclic => "acyclic",
            Condition::Spanning => "spanning",
            Condition::EdgeDisjoint => "edge-disjoint",
            Condition::InternalOverlap => "internal-overlap",
            Condition::PathVertexIntersection => "path-vertex-intersection",
            Condition::PathEdgeIntersection => "path-edge-intersection",
        }
    }

    pub fn is_structural(self) -> bool {
        matches!(
            self,
            Condition::Subgraph | Condition::Acyclic | Condition::Spanning
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// An edge of one tree that is not an AQ_n edge, or closes a cycle.
    TreeEdge { tree: usize, edge: Edge },
    /// A vertex not reached from vertex 0 in `tree`; `edges` is the tree's
    /// edge count.
    Unreached {
        tree: usize,
        vertex: u32,
        edges: usize,
    },
    /// An edge present in two trees.
    SharedEdge { edge: Edge, trees: [usize; 2] },
    /// A vertex internal in two trees.
    SharedInternal { vertex: u32, trees: [usize; 2] },
    /// Two tree paths between `u` and `v` that meet outside the endpoints.
    PathPair {
        u: u32,
        v: u32,
        trees: [usize; 2],
        paths: [Vec<u32>; 2],
        shared: Vec<u32>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub condition: Condition,
    pub status: Status,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReportStats {
    pub diameters: Vec<u32>,
    pub internal_counts: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs_checked: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub mode: Mode,
    pub n: u8,
    pub k: usize,
    pub checks: Vec<Check>,
    pub stats: ReportStats,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    /// 0 pass, 1 CIST violation, 2 structurally malformed input.
    pub fn exit_code(&self) -> i32 {
        match self.first_failure() {
            None => 0,
            Some(c) if c.condition.is_structural() => 2,
            Some(_) => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    fn from_checks(mode: Mode, n: u8, k: usize, checks: Vec<Check>, stats: ReportStats) -> Self {
        let verdict = if checks.iter().all(|c| c.status == Status::Pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            verdict,
            mode,
            n,
            k,
            checks,
            stats,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        let mode = match self.mode {
            Mode::Characterization => "characterization",
            Mode::BruteForce => "brute force",
            Mode::Both => "characterization and brute force",
        };
        writeln!(f, "{verdict}: {} trees on AQ_{} ({mode})", self.k, self.n)?;
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            write!(f, "  {:<26} {status}", c.condition.as_str())?;
            if let Some(w) = &c.witness {
                write!(
                    f,
                    "  witness: {}",
                    serde_json::to_string(w).unwrap_or_default()
                )?;
            }
            writeln!(f)?;
        }
        if !self.stats.diameters.is_empty() {
            writeln!(f, "  diameters: {:?}", self.stats.diameters)?;
            writeln!(f, "  internal counts: {:?}", self.stats.internal_counts)?;
        }
        if let Some(p) = self.stats.pairs_checked {
            writeln!(f, "  vertex pairs checked: {p}")?;
        }
        Ok(())
    }
}

/// Verification tuning.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub bruteforce_max_n: u8,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            bruteforce_max_n: DEFAULT_BRUTEFORCE_MAX_N,
        }
    }
}

/// Accumulates checks in order and skips everything after the first
/// failure.
struct Checklist {
    checks: Vec<Check>,
    failed: bool,
}

impl Checklist {
    fn new() -> Self {
        Checklist {
            checks: Vec::new(),
            failed: false,
        }
    }

    fn run(&mut self, condition: Condition, check: impl FnOnce() -> Option<Witness>) {
        if self.failed {
            self.checks.push(Check {
                condition,
                status: Status::Skipped,
                witness: None,
            });
            return;
        }
        let witness = check();
        let status = if witness.is_some() {
            self.failed = true;
            Status::Fail
        } else {
            Status::Pass
        };
        self.checks.push(Check {
            condition,
            status,
            witness,
        });
    }
}

fn validate_shape(n: u8, lists: &[Vec<Edge>]) -> Result<()> {
    if lists.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if !(1..=MAX_DIM).contains(&n) {
        return Err(Error::DimensionOutOfRange {
            n: n as u32,
            min: 1,
            max: MAX_DIM as u32,
        });
    }
    Ok(())
}

fn subgraph_violation(n: u8, lists: &[Vec<Edge>]) -> Option<Witness> {
    let size = 1u64 << n;
    lists.iter().enumerate().find_map(|(i, l)| {
        let mut sorted = l.clone();
        sorted.sort_unstable();
        sorted
            .into_iter()
            .find(|e| e.hi() as u64 >= size || !adjacent_values(e.lo(), e.hi()))
            .map(|edge| Witness::TreeEdge { tree: i + 1, edge })
    })
}

fn acyclic_violation(n: u8, lists: &[Vec<Edge>]) -> Option<Witness> {
    lists.iter().enumerate().find_map(|(i, l)| {
        let mut sorted = l.clone();
        sorted.sort_unstable();
        let mut uf = UnionFind::new(1 << n);
        sorted
            .into_iter()
            .find(|e| !uf.union(e.lo(), e.hi()))
            .map(|edge| Witness::TreeEdge { tree: i + 1, edge })
    })
}

fn spanning_violation(n: u8, lists: &[Vec<Edge>]) -> Option<Witness> {
    let size = 1u32 << n;
    lists.iter().enumerate().find_map(|(i, l)| {
        let mut uf = UnionFind::new(size as usize);
        for e in l {
            uf.union(e.lo(), e.hi());
        }
        let root = uf.find(0);
        (1..size)
            .find(|&v| uf.find(v) != root)
            .map(|vertex| Witness::Unreached {
                tree: i + 1,
                vertex,
                edges: l.len(),
            })
    })
}

/// Smallest edge that appears in two trees, with the first two owners.
fn shared_edge(trees: &[SpanningTree]) -> Option<Witness> {
    let mut tagged: Vec<(Edge, usize)> = trees
        .iter()
        .enumerate()
        .flat_map(|(i, t)| t.edges().iter().map(move |&e| (e, i + 1)))
        .collect();
    tagged.sort_unstable();
    tagged.windows(2).find_map(|w| {
        (w[0].0 == w[1].0).then(|| Witness::SharedEdge {
            edge: w[0].0,
            trees: [w[0].1, w[1].1],
        })
    })
}

/// Smallest vertex internal in two trees.
fn shared_internal(trees: &[SpanningTree]) -> Option<Witness> {
    let size = trees[0].vertex_count() as u32;
    (0..size).find_map(|v| {
        let mut owners = trees
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_internal(v))
            .map(|(i, _)| i + 1);
        match (owners.next(), owners.next()) {
            (Some(a), Some(b)) => Some(Witness::SharedInternal {
                vertex: v,
                trees: [a, b],
            }),
            _ => None,
        }
    })
}

#[derive(Clone, Debug)]
struct PathViolation {
    key: (u32, u32, usize, usize),
    witness: Witness,
}

fn earlier(a: Option<PathViolation>, b: Option<PathViolation>) -> Option<PathViolation> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x.key <= y.key { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

fn trace(parent: &[u32], from: u32) -> Vec<u32> {
    let mut path = vec![from];
    let mut x = from;
    while parent[x as usize] != x {
        x = parent[x as usize];
        path.push(x);
    }
    path
}

/// First vertex-intersection and first edge-intersection violations among
/// all pairs `{u, v}` with `u < v`, ordered by `(u, v, i, j)`.
fn scan_paths(trees: &[SpanningTree]) -> (Option<PathViolation>, Option<PathViolation>) {
    let size = trees[0].vertex_count() as u32;
    let k = trees.len();
    (0..size)
        .into_par_iter()
        .map(|u| {
            let parents: Vec<Vec<u32>> = trees.iter().map(|t| t.bfs(u).1).collect();
            let mut vertex_hit = None;
            let mut edge_hit = None;
            for v in u + 1..size {
                if vertex_hit.is_some() && edge_hit.is_some() {
                    break;
                }
                // paths run u -> v
                let paths: Vec<Vec<u32>> = parents
                    .iter()
                    .map(|p| {
                        let mut path = trace(p, v);
                        path.reverse();
                        path
                    })
                    .collect();
                for i in 0..k {
                    for j in i + 1..k {
                        let (a, b) = (&paths[i], &paths[j]);
                        if vertex_hit.is_none() {
                            let inner_a = &a[1..a.len() - 1];
                            let shared: Vec<u32> = b[1..b.len() - 1]
                                .iter()
                                .copied()
                                .filter(|x| inner_a.contains(x))
                                .collect();
                            if !shared.is_empty() {
                                vertex_hit = Some(PathViolation {
                                    key: (u, v, i, j),
                                    witness: Witness::PathPair {
                                        u,
                                        v,
                                        trees: [i + 1, j + 1],
                                        paths: [a.clone(), b.clone()],
                                        shared,
                                    },
                                });
                            }
                        }
                        if edge_hit.is_none() {
                            let edges_a: Vec<Edge> =
                                a.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
                            let mut shared: Vec<u32> = Vec::new();
                            for e in b.windows(2).map(|w| Edge::new(w[0], w[1])) {
                                if edges_a.contains(&e) {
                                    shared.extend([e.lo(), e.hi()]);
                                }
                            }
                            if !shared.is_empty() {
                                edge_hit = Some(PathViolation {
                                    key: (u, v, i, j),
                                    witness: Witness::PathPair {
                                        u,
                                        v,
                                        trees: [i + 1, j + 1],
                                        paths: [a.clone(), b.clone()],
                                        shared,
                                    },
                                });
                            }
                        }
                    }
                }
            }
            (vertex_hit, edge_hit)
        })
        .reduce(
            || (None, None),
            |x, y| (earlier(x.0, y.0), earlier(x.1, y.1)),
        )
}

/// Structural checks on raw edge lists. Returns the built trees when all
/// pass.
fn structural(n: u8, lists: &[Vec<Edge>], list: &mut Checklist) -> Option<Vec<SpanningTree>> {
    list.run(Condition::Subgraph, || subgraph_violation(n, lists));
    list.run(Condition::Acyclic, || acyclic_violation(n, lists));
    list.run(Condition::Spanning, || spanning_violation(n, lists));
    if list.failed {
        return None;
    }
    let trees = lists
        .iter()
        .map(|l| SpanningTree::from_edges(n, l.iter().copied()))
        .collect::<Result<Vec<_>>>()
        .expect("structural checks passed");
    Some(trees)
}

fn tree_stats(trees: Option<&[SpanningTree]>) -> ReportStats {
    match trees {
        Some(ts) => ReportStats {
            diameters: ts.iter().map(SpanningTree::diameter).collect(),
            internal_counts: ts.iter().map(|t| t.internal_values().len()).collect(),
            pairs_checked: None,
        },
        None => ReportStats::default(),
    }
}

/// Characterization route on raw edge lists.
pub fn characterize_edge_lists(n: u8, lists: &[Vec<Edge>]) -> Result<VerificationReport> {
    validate_shape(n, lists)?;
    let mut list = Checklist::new();
    let trees = structural(n, lists, &mut list);
    let t = trees.as_deref();
    list.run(Condition::EdgeDisjoint, || shared_edge(t.unwrap()));
    list.run(Condition::InternalOverlap, || shared_internal(t.unwrap()));
    let stats = tree_stats(t);
    Ok(VerificationReport::from_checks(
        Mode::Characterization,
        n,
        lists.len(),
        list.checks,
        stats,
    ))
}

/// Brute-force route on raw edge lists. Refuses `n` above `cap`.
pub fn bruteforce_edge_lists(n: u8, lists: &[Vec<Edge>], cap: u8) -> Result<VerificationReport> {
    validate_shape(n, lists)?;
    if n > cap {
        return Err(Error::BruteForceCap { n, cap });
    }
    let mut list = Checklist::new();
    let trees = structural(n, lists, &mut list);
    let t = trees.as_deref();
    list.run(Condition::EdgeDisjoint, || shared_edge(t.unwrap()));
    let mut edge_hit = None;
    list.run(Condition::PathVertexIntersection, || {
        let (vertex, edge) = scan_paths(t.unwrap());
        edge_hit = Some(edge);
        vertex.map(|p| p.witness)
    });
    list.run(Condition::PathEdgeIntersection, || {
        edge_hit.flatten().map(|p| p.witness)
    });
    let mut stats = tree_stats(t);
    if t.is_some() {
        let size = 1u64 << n;
        stats.pairs_checked = Some(size * (size - 1) / 2);
    }
    Ok(VerificationReport::from_checks(
        Mode::BruteForce,
        n,
        lists.len(),
        list.checks,
        stats,
    ))
}

/// Runs the requested mode on raw edge lists. In `Both` mode the two
/// verdicts must agree; a disagreement is an internal-consistency error.
pub fn verify_edge_lists(
    n: u8,
    lists: &[Vec<Edge>],
    mode: Mode,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    match mode {
        Mode::Characterization => characterize_edge_lists(n, lists),
        Mode::BruteForce => bruteforce_edge_lists(n, lists, opts.bruteforce_max_n),
        Mode::Both => {
            let ch = characterize_edge_lists(n, lists)?;
            let bf = bruteforce_edge_lists(n, lists, opts.bruteforce_max_n)?;
            if ch.verdict != bf.verdict {
                return Err(Error::ModeDisagreement {
                    characterization: ch.passed(),
                    brute_force: bf.passed(),
                });
            }
            let mut checks = ch.checks;
            checks.extend(bf.checks.into_iter().filter(|c| {
                matches!(
                    c.condition,
                    Condition::PathVertexIntersection | Condition::PathEdgeIntersection
                )
            }));
            let mut stats = ch.stats;
            stats.pairs_checked = bf.stats.pairs_checked;
            Ok(VerificationReport::from_checks(
                Mode::Both,
                n,
                lists.len(),
                checks,
                stats,
            ))
        }
    }
}

pub fn verify_characterization(f: &CistFamily) -> Result<VerificationReport> {
    characterize_edge_lists(f.n(), &f.edge_lists())
}

pub fn verify_bruteforce(f: &CistFamily) -> Result<VerificationReport> {
    bruteforce_edge_lists(f.n(), &f.edge_lists(), DEFAULT_BRUTEFORCE_MAX_N)
}

pub fn verify_family(f: &CistFamily, mode: Mode) -> Result<VerificationReport> {
    verify_edge_lists(f.n(), &f.edge_lists(), mode, VerifyOptions::default())
}
