//! Reference implementations used as oracles by the integration tests.
//! Everything here is written from the definitions, without calling into the
//! library's own graph or tree algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

/// AQ_n adjacency from the recursive definition: AQ_1 is K_2; AQ_n is two
/// copies of AQ_{n-1} (leading bit 0 and 1) where `0x` is joined to `1y`
/// iff `y = x` or `y` is the complement of `x`.
pub fn adjacent_by_definition(u: u32, v: u32, n: u8) -> bool {
    if u == v {
        return false;
    }
    if n == 1 {
        return true;
    }
    let top = 1u32 << (n - 1);
    let mask = top - 1;
    let (ru, rv) = (u & mask, v & mask);
    if (u & top) == (v & top) {
        adjacent_by_definition(ru, rv, n - 1)
    } else {
        ru == rv || ru == (!rv & mask)
    }
}

pub fn edges_by_definition(n: u8) -> BTreeSet<(u32, u32)> {
    let size = 1u32 << n;
    let mut out = BTreeSet::new();
    for u in 0..size {
        for v in u + 1..size {
            if adjacent_by_definition(u, v, n) {
                out.insert((u, v));
            }
        }
    }
    out
}

pub fn adjacency(n: u8, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); 1 << n];
    for &(a, b) in edges {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    adj
}

pub fn bfs(adj: &[Vec<u32>], src: u32) -> (Vec<Option<u32>>, Vec<u32>) {
    let mut dist = vec![None; adj.len()];
    let mut parent = vec![u32::MAX; adj.len()];
    dist[src as usize] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x as usize].unwrap();
        for &y in &adj[x as usize] {
            if dist[y as usize].is_none() {
                dist[y as usize] = Some(d + 1);
                parent[y as usize] = x;
                queue.push_back(y);
            }
        }
    }
    (dist, parent)
}

/// Spanning tree of AQ_n: every edge is an AQ_n edge, no repeats, `2^n - 1`
/// edges, connected.
pub fn is_spanning_tree(n: u8, edges: &[(u32, u32)]) -> bool {
    let size = 1usize << n;
    let distinct: BTreeSet<(u32, u32)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    if distinct.len() != edges.len() || edges.len() != size - 1 {
        return false;
    }
    if !edges.iter().all(|&(a, b)| {
        (a as usize) < size && (b as usize) < size && adjacent_by_definition(a, b, n)
    }) {
        return false;
    }
    let (dist, _) = bfs(&adjacency(n, edges), 0);
    dist.iter().all(Option::is_some)
}

/// Largest distance between two vertices, by BFS from every vertex.
pub fn diameter(n: u8, edges: &[(u32, u32)]) -> u32 {
    let adj = adjacency(n, edges);
    (0..adj.len() as u32)
        .map(|s| {
            bfs(&adj, s)
                .0
                .into_iter()
                .map(|d| d.unwrap())
                .max()
                .unwrap()
        })
        .max()
        .unwrap()
}

/// Smallest eccentricity.
pub fn radius(n: u8, edges: &[(u32, u32)]) -> u32 {
    let adj = adjacency(n, edges);
    (0..adj.len() as u32)
        .map(|s| {
            bfs(&adj, s)
                .0
                .into_iter()
                .map(|d| d.unwrap())
                .max()
                .unwrap()
        })
        .min()
        .unwrap()
}

pub fn internal(n: u8, edges: &[(u32, u32)]) -> BTreeSet<u32> {
    adjacency(n, edges)
        .iter()
        .enumerate()
        .filter(|(_, a)| a.len() > 1)
        .map(|(v, _)| v as u32)
        .collect()
}

fn path_from_parents(parent: &[u32], src: u32, dst: u32) -> Vec<u32> {
    let mut path = vec![dst];
    let mut x = dst;
    while x != src {
        x = parent[x as usize];
        path.push(x);
    }
    path.reverse();
    path
}

/// The CIST definition checked literally: all trees are spanning trees and
/// for every pair of vertices and every two trees the two tree paths share
/// only their endpoints and no edge.
pub fn is_cist_family(n: u8, lists: &[Vec<(u32, u32)>]) -> bool {
    if !lists.iter().all(|l| is_spanning_tree(n, l)) {
        return false;
    }
    let adjs: Vec<_> = lists.iter().map(|l| adjacency(n, l)).collect();
    let size = 1u32 << n;
    for u in 0..size {
        let parents: Vec<Vec<u32>> = adjs.iter().map(|a| bfs(a, u).1).collect();
        for v in u + 1..size {
            let paths: Vec<Vec<u32>> = parents.iter().map(|p| path_from_parents(p, u, v)).collect();
            for i in 0..paths.len() {
                for j in i + 1..paths.len() {
                    let inner_i: BTreeSet<u32> =
                        paths[i][1..paths[i].len() - 1].iter().copied().collect();
                    if paths[j][1..paths[j].len() - 1]
                        .iter()
                        .any(|x| inner_i.contains(x))
                    {
                        return false;
                    }
                    let ei: BTreeSet<(u32, u32)> = paths[i]
                        .windows(2)
                        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                        .collect();
                    if paths[j]
                        .windows(2)
                        .any(|w| ei.contains(&(w[0].min(w[1]), w[0].max(w[1]))))
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// Drop one edge of one tree.
    Delete,
    /// Copy an edge of tree `j` into tree `i`, dropping an edge of the cycle
    /// it closes so tree `i` stays a spanning tree.
    Duplicate,
    /// Replace one tree edge by a random AQ_n edge; the result may or may not
    /// still be a spanning tree.
    Swap,
    /// Replace one tree edge by an AQ_n edge that reconnects the two halves,
    /// so the result is always a spanning tree.
    TreeSwap,
}

pub const CORRUPTIONS: [Corruption; 4] = [
    Corruption::Delete,
    Corruption::Duplicate,
    Corruption::Swap,
    Corruption::TreeSwap,
];

fn component_of(n: u8, edges: &[(u32, u32)], start: u32) -> BTreeSet<u32> {
    let (dist, _) = bfs(&adjacency(n, edges), start);
    dist.iter()
        .enumerate()
        .filter(|(_, d)| d.is_some())
        .map(|(v, _)| v as u32)
        .collect()
}

/// Applies one corruption in place. Returns false if no change was possible
/// with the drawn choices.
pub fn corrupt<R: Rng>(
    n: u8,
    lists: &mut [Vec<(u32, u32)>],
    kind: Corruption,
    rng: &mut R,
) -> bool {
    let all: Vec<(u32, u32)> = edges_by_definition(n).into_iter().collect();
    let i = rng.gen_range(0..lists.len());
    match kind {
        Corruption::Delete => {
            let e = rng.gen_range(0..lists[i].len());
            lists[i].remove(e);
            true
        }
        Corruption::Swap => {
            let e = rng.gen_range(0..lists[i].len());
            let present: BTreeSet<(u32, u32)> = lists[i].iter().copied().collect();
            let fresh: Vec<_> = all.iter().filter(|e| !present.contains(e)).collect();
            let Some(&&add) = fresh.choose(rng) else {
                return false;
            };
            lists[i][e] = add;
            true
        }
        Corruption::TreeSwap => {
            let e = rng.gen_range(0..lists[i].len());
            let removed = lists[i].remove(e);
            let side = component_of(n, &lists[i], removed.0);
            let candidates: Vec<_> = all
                .iter()
                .filter(|&&(a, b)| side.contains(&a) != side.contains(&b) && (a, b) != removed)
                .collect();
            match candidates.choose(rng) {
                Some(&&add) => {
                    lists[i].push(add);
                    true
                }
                None => {
                    lists[i].insert(e, removed);
                    false
                }
            }
        }
        Corruption::Duplicate => {
            let j = (i + rng.gen_range(1..lists.len())) % lists.len();
            let add = *lists[j].choose(rng).unwrap();
            if lists[i].contains(&add) {
                return false;
            }
            // the tree path between the endpoints plus `add` is the cycle
            let adj = adjacency(n, &lists[i]);
            let (dist, parent) = bfs(&adj, add.0);
            if dist[add.1 as usize].is_none() {
                // an earlier deletion split the endpoints apart
                return false;
            }
            let path = path_from_parents(&parent, add.0, add.1);
            let k = rng.gen_range(0..path.len() - 1);
            let (a, b) = (path[k], path[k + 1]);
            let drop = (a.min(b), a.max(b));
            lists[i].retain(|&x| x != drop);
            lists[i].push(add);
            true
        }
    }
}

pub fn edge_pairs(t: &aqcist::SpanningTree) -> Vec<(u32, u32)> {
    t.edges().iter().map(|e| (e.lo(), e.hi())).collect()
}

pub fn family_pairs(f: &aqcist::CistFamily) -> Vec<Vec<(u32, u32)>> {
    f.trees().iter().map(edge_pairs).collect()
}

pub fn to_edges(lists: &[Vec<(u32, u32)>]) -> Vec<Vec<aqcist::Edge>> {
    lists
        .iter()
        .map(|l| l.iter().map(|&(a, b)| aqcist::Edge::new(a, b)).collect())
        .collect()
}
