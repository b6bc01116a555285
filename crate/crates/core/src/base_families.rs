//! Hard-coded base families on AQ_3, AQ_4 and AQ_5, plus a randomized
//! search that finds CIST families on small cubes from scratch.
//!
//! Edge lists are written with one-based labels (`00000` is `1`) so they can
//! be read side by side with the published tables, and converted to
//! zero-based values on load.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::family::{CistFamily, Provenance};
use crate::topology::{neighbor_values, Edge};
use crate::tree::SpanningTree;
use crate::verification::{verify_characterization, verify_family, Mode};

const AQ5_T1: [(u32, u32); 31] = [
    (1, 2),
    (1, 3),
    (1, 5),
    (1, 16),
    (1, 17),
    (4, 5),
    (5, 7),
    (5, 12),
    (5, 21),
    (5, 28),
    (6, 7),
    (7, 8),
    (7, 10),
    (9, 25),
    (11, 27),
    (13, 16),
    (14, 16),
    (15, 16),
    (17, 18),
    (17, 20),
    (17, 24),
    (17, 25),
    (19, 27),
    (22, 27),
    (23, 31),
    (25, 27),
    (26, 27),
    (27, 31),
    (29, 31),
    (30, 31),
    (31, 32),
];

const AQ5_T2: [(u32, u32); 31] = [
    (1, 4),
    (2, 3),
    (2, 4),
    (2, 6),
    (2, 10),
    (4, 8),
    (4, 12),
    (4, 13),
    (4, 29),
    (5, 8),
    (7, 23),
    (8, 16),
    (8, 24),
    (8, 25),
    (9, 10),
    (10, 11),
    (10, 15),
    (10, 23),
    (14, 30),
    (17, 21),
    (18, 23),
    (19, 30),
    (20, 21),
    (21, 23),
    (21, 28),
    (22, 23),
    (23, 26),
    (26, 30),
    (26, 31),
    (27, 30),
    (30, 32),
];

const AQ5_T3: [(u32, u32); 31] = [
    (1, 9),
    (2, 15),
    (3, 14),
    (4, 20),
    (5, 13),
    (6, 14),
    (7, 15),
    (8, 9),
    (9, 11),
    (9, 12),
    (9, 13),
    (9, 16),
    (10, 14),
    (13, 14),
    (13, 15),
    (13, 29),
    (15, 18),
    (15, 31),
    (17, 19),
    (19, 20),
    (19, 22),
    (19, 23),
    (20, 24),
    (20, 29),
    (21, 29),
    (25, 29),
    (26, 28),
    (27, 28),
    (28, 29),
    (28, 32),
    (29, 30),
];

const AQ5_T4: [(u32, u32); 31] = [
    (1, 32),
    (2, 18),
    (3, 4),
    (3, 7),
    (3, 11),
    (5, 6),
    (6, 8),
    (6, 11),
    (6, 27),
    (9, 24),
    (10, 12),
    (11, 12),
    (11, 14),
    (11, 15),
    (11, 22),
    (12, 13),
    (12, 16),
    (12, 28),
    (17, 32),
    (18, 19),
    (18, 20),
    (18, 22),
    (18, 26),
    (18, 31),
    (21, 22),
    (22, 24),
    (22, 30),
    (23, 24),
    (24, 25),
    (24, 32),
    (29, 32),
];

// Read off the AQ_3 and AQ_4 drawings.
const AQ3_T1: [(u32, u32); 7] = [(1, 2), (1, 3), (1, 5), (1, 8), (4, 5), (5, 6), (5, 7)];
const AQ3_T2: [(u32, u32); 7] = [(1, 4), (2, 4), (3, 4), (4, 8), (5, 8), (6, 8), (7, 8)];

const AQ4_T1: [(u32, u32); 15] = [
    (1, 9),
    (2, 6),
    (3, 6),
    (4, 12),
    (5, 6),
    (5, 8),
    (5, 13),
    (6, 7),
    (6, 11),
    (9, 12),
    (9, 16),
    (10, 12),
    (11, 12),
    (11, 14),
    (11, 15),
];
const AQ4_T2: [(u32, u32); 15] = [
    (1, 16),
    (2, 3),
    (2, 4),
    (2, 10),
    (2, 15),
    (4, 5),
    (4, 8),
    (4, 13),
    (6, 8),
    (7, 10),
    (8, 9),
    (8, 16),
    (10, 11),
    (12, 16),
    (14, 16),
];
const AQ4_T3: [(u32, u32); 15] = [
    (1, 3),
    (2, 7),
    (3, 4),
    (3, 11),
    (3, 14),
    (5, 7),
    (6, 14),
    (7, 8),
    (7, 15),
    (9, 13),
    (10, 15),
    (12, 13),
    (13, 14),
    (13, 15),
    (15, 16),
];

/// Default number of randomized attempts for [`search_family`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000;
pub const DEFAULT_SEARCH_SEED: u64 = 0x5eed;

fn paper_tree(n: u8, list: &[(u32, u32)]) -> Result<SpanningTree> {
    SpanningTree::from_edges(n, list.iter().map(|&(a, b)| Edge::from_paper(a, b)))
}

/// The four trees on AQ_5 from the published edge tables.
pub fn aq5_family() -> CistFamily {
    let trees = [&AQ5_T1[..], &AQ5_T2[..], &AQ5_T3[..], &AQ5_T4[..]]
        .into_iter()
        .map(|l| paper_tree(5, l).expect("AQ_5 table is a spanning tree"))
        .collect();
    CistFamily::new(trees, Provenance::PaperTable).expect("non-empty")
}

fn figure_family(n: u8) -> Result<CistFamily> {
    let lists: Vec<&[(u32, u32)]> = match n {
        3 => vec![&AQ3_T1, &AQ3_T2],
        4 => vec![&AQ4_T1, &AQ4_T2, &AQ4_T3],
        _ => return Err(Error::UnsupportedBase { n }),
    };
    let trees = lists
        .into_iter()
        .map(|l| paper_tree(n, l))
        .collect::<Result<Vec<_>>>()?;
    CistFamily::new(trees, Provenance::PaperFigure)
}

/// The base family on AQ_n for `n` in 3..=5: `n - 1` CISTs.
///
/// For n = 3 and 4 the drawn trees are checked on load; if they fail, a
/// searched family is returned instead with provenance `search`.
pub fn base_family(n: u8) -> Result<CistFamily> {
    match n {
        5 => Ok(aq5_family()),
        3 | 4 => {
            if let Ok(f) = figure_family(n) {
                if verify_characterization(&f)?.passed() {
                    return Ok(f);
                }
            }
            search_family(
                n,
                n as usize - 1,
                DEFAULT_SEARCH_BUDGET,
                DEFAULT_SEARCH_SEED,
            )?
            .ok_or_else(|| Error::NotCist(format!("no base family found for AQ_{n}")))
        }
        _ => Err(Error::UnsupportedBase { n }),
    }
}

/// Randomized search for `k` CISTs of AQ_n.
///
/// Each attempt grows `k` disjoint connected dominating sets, one per tree,
/// so that every vertex is internal in at most one tree. Tree `i` is then
/// the spanning tree of its set plus one edge from every other vertex into
/// the set, choosing edges not taken by another tree. Returns `Ok(None)`
/// when `budget` attempts are exhausted. Deterministic for a fixed seed.
pub fn search_family(n: u8, k: usize, budget: u64, seed: u64) -> Result<Option<CistFamily>> {
    if !(3..=4).contains(&n) || k + 1 != n as usize {
        return Err(Error::UnsupportedBase { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        if let Some(lists) = attempt(n, k, &mut rng) {
            let trees = lists
                .into_iter()
                .map(|l| SpanningTree::from_edges(n, l))
                .collect::<Result<Vec<_>>>();
            let Ok(trees) = trees else { continue };
            let family = CistFamily::new(trees, Provenance::Search)?;
            if verify_family(&family, Mode::Both)?.passed() {
                return Ok(Some(family));
            }
        }
    }
    Ok(None)
}

const FREE: usize = usize::MAX;

fn attempt(n: u8, k: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<Edge>>> {
    let size = 1usize << n;
    let adj: Vec<Vec<u32>> = (0..size as u32).map(|u| neighbor_values(u, n)).collect();
    let mut owner = vec![FREE; size];

    // Grow one connected dominating set per tree from unowned vertices.
    let mut sets: Vec<Vec<u32>> = Vec::with_capacity(k);
    for i in 0..k {
        let free: Vec<u32> = (0..size as u32)
            .filter(|&v| owner[v as usize] == FREE)
            .collect();
        let &start = free.choose(rng)?;
        let mut set = vec![start];
        owner[start as usize] = i;
        loop {
            let dominated =
                (0..size).all(|v| owner[v] == i || adj[v].iter().any(|&w| owner[w as usize] == i));
            if dominated {
                break;
            }
            let frontier: Vec<u32> = set
                .iter()
                .flat_map(|&s| adj[s as usize].iter().copied())
                .filter(|&w| owner[w as usize] == FREE)
                .collect();
            let &next = frontier.choose(rng)?;
            owner[next as usize] = i;
            set.push(next);
        }
        sets.push(set);
    }

    let mut used = std::collections::HashSet::new();
    let mut lists = vec![Vec::with_capacity(size - 1); k];
    // Internal edges: a spanning tree of each set in growth order.
    for (i, set) in sets.iter().enumerate() {
        for (j, &v) in set.iter().enumerate().skip(1) {
            let parents: Vec<u32> = set[..j]
                .iter()
                .copied()
                .filter(|&p| adj[v as usize].contains(&p))
                .collect();
            let &p = parents.choose(rng)?;
            let e = Edge::new(p, v);
            used.insert(e);
            lists[i].push(e);
        }
    }
    // Leaf attachments, visiting (tree, vertex) pairs in random order.
    let mut jobs: Vec<(usize, u32)> = (0..k)
        .flat_map(|i| (0..size as u32).map(move |v| (i, v)))
        .filter(|&(i, v)| owner[v as usize] != i)
        .collect();
    jobs.shuffle(rng);
    for (i, v) in jobs {
        let options: Vec<Edge> = adj[v as usize]
            .iter()
            .filter(|&&w| owner[w as usize] == i)
            .map(|&w| Edge::new(v, w))
            .filter(|e| !used.contains(e))
            .collect();
        if options.is_empty() {
            return None;
        }
        let e = options[rng.gen_range(0..options.len())];
        used.insert(e);
        lists[i].push(e);
    }
    Some(lists)
}
