//! Multipath routes induced by a CIST family: the `i`-th route between two
//! vertices is their path in tree `i`. Routes from different trees share
//! only the endpoints.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::CistFamily;
use crate::topology::{adjacent_values, VertexId};
use crate::tree::{SpanningTree, TreePath};
use crate::verification::verify_characterization;

struct RootedTree {
    parent: Vec<u32>,
    depth: Vec<u32>,
    diameter: u32,
}

impl RootedTree {
    fn new(t: &SpanningTree) -> Self {
        let (depth, parent) = t.bfs(0);
        RootedTree {
            parent,
            depth,
            diameter: t.diameter(),
        }
    }

    fn path(&self, u: u32, v: u32) -> Vec<u32> {
        let (mut a, mut b) = (u, v);
        let mut head = vec![a];
        let mut tail = vec![b];
        while self.depth[a as usize] > self.depth[b as usize] {
            a = self.parent[a as usize];
            head.push(a);
        }
        while self.depth[b as usize] > self.depth[a as usize] {
            b = self.parent[b as usize];
            tail.push(b);
        }
        while a != b {
            a = self.parent[a as usize];
            b = self.parent[b as usize];
            head.push(a);
            tail.push(b);
        }
        tail.pop();
        head.extend(tail.into_iter().rev());
        head
    }
}

/// A verified family with every tree rooted for fast path queries.
pub struct Router {
    n: u8,
    trees: Vec<RootedTree>,
}

impl Router {
    /// Verifies the family (characterization route) and prepares it.
    pub fn new(f: &CistFamily) -> Result<Self> {
        let report = verify_characterization(f)?;
        if !report.passed() {
            let why = report
                .first_failure()
                .map(|c| c.condition.as_str().to_string())
                .unwrap_or_default();
            return Err(Error::NotCist(why));
        }
        Ok(Router {
            n: f.n(),
            trees: f.trees().iter().map(RootedTree::new).collect(),
        })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.trees.len()
    }

    pub fn diameters(&self) -> Vec<u32> {
        self.trees.iter().map(|t| t.diameter).collect()
    }

    fn check(&self, u: VertexId, v: VertexId) -> Result<()> {
        for x in [u, v] {
            if x.dim() != self.n {
                return Err(Error::DimensionMismatch {
                    left: self.n,
                    right: x.dim(),
                });
            }
        }
        if u == v {
            return Err(Error::SameEndpoints(u.bits()));
        }
        Ok(())
    }

    /// One path per tree, in tree order.
    pub fn routes(&self, u: VertexId, v: VertexId) -> Result<Vec<TreePath>> {
        self.check(u, v)?;
        Ok(self
            .trees
            .iter()
            .map(|t| TreePath {
                vertices: t
                    .path(u.bits(), v.bits())
                    .into_iter()
                    .map(|b| VertexId::new(b, self.n).expect("in range"))
                    .collect(),
            })
            .collect())
    }

    fn route_lengths(&self, u: u32, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.trees
            .iter()
            .map(move |t| t.path(u, v).len() as u32 - 1)
    }
}

pub fn disjoint_routes(f: &CistFamily, u: VertexId, v: VertexId) -> Result<Vec<TreePath>> {
    Router::new(f)?.routes(u, v)
}

/// True when the paths pairwise share no interior vertex and no edge.
pub fn routes_are_independent(paths: &[TreePath]) -> bool {
    for (i, a) in paths.iter().enumerate() {
        for b in &paths[i + 1..] {
            if a.interior().iter().any(|x| b.interior().contains(x)) {
                return false;
            }
            let edges_a: Vec<_> = a.edges().collect();
            if b.edges().any(|e| edges_a.contains(&e)) {
                return false;
            }
        }
    }
    true
}

/// Which vertex pairs [`route_stats`] looks at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairSample {
    /// Every unordered pair.
    All,
    /// `count` uniformly random ordered pairs with distinct endpoints.
    Random {
        count: usize,
        seed: u64,
    },
    Pairs(Vec<(VertexId, VertexId)>),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RouteStats {
    pub pairs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub diameters: Vec<u32>,
    pub max_len: Vec<u32>,
    pub mean_len: Vec<f64>,
    /// Longest tree route between two vertices adjacent in AQ_n, per tree;
    /// their graph distance is 1.
    pub adjacent_pairs: usize,
    pub adjacent_max_len: Vec<u32>,
}

impl RouteStats {
    /// Every route is no longer than the largest tree diameter.
    pub fn within_diameters(&self) -> bool {
        let worst = self.diameters.iter().copied().max().unwrap_or(0);
        self.max_len.iter().all(|&m| m <= worst)
            && self
                .max_len
                .iter()
                .zip(&self.diameters)
                .all(|(m, d)| m <= d)
    }
}

pub fn route_stats(f: &CistFamily, sample: &PairSample) -> Result<RouteStats> {
    let router = Router::new(f)?;
    let size = 1u64 << f.n();
    let pairs: Vec<(u32, u32)> = match sample {
        PairSample::All => (0..size as u32)
            .flat_map(|u| (u + 1..size as u32).map(move |v| (u, v)))
            .collect(),
        PairSample::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*count)
                .map(|_| loop {
                    let u = rng.gen_range(0..size) as u32;
                    let v = rng.gen_range(0..size) as u32;
                    if u != v {
                        break (u, v);
                    }
                })
                .collect()
        }
        PairSample::Pairs(p) => {
            for &(u, v) in p {
                router.check(u, v)?;
            }
            p.iter().map(|&(u, v)| (u.bits(), v.bits())).collect()
        }
    };
    let k = router.k();
    let mut max_len = vec![0u32; k];
    let mut total = vec![0u64; k];
    let mut adjacent_pairs = 0;
    let mut adjacent_max_len = vec![0u32; k];
    for &(u, v) in &pairs {
        let adjacent = adjacent_values(u, v);
        adjacent_pairs += adjacent as usize;
        for (i, len) in router.route_lengths(u, v).enumerate() {
            max_len[i] = max_len[i].max(len);
            total[i] += len as u64;
            if adjacent {
                adjacent_max_len[i] = adjacent_max_len[i].max(len);
            }
        }
    }
    let count = pairs.len().max(1) as f64;
    Ok(RouteStats {
        pairs: pairs.len(),
        seed: match sample {
            PairSample::Random { seed, .. } => Some(*seed),
            _ => None,
        },
        diameters: router.diameters(),
        max_len,
        mean_len: total.iter().map(|&t| t as f64 / count).collect(),
        adjacent_pairs,
        adjacent_max_len,
    })
}
