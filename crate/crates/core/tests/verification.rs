mod common;

use std::collections::BTreeSet;

use aqcist::base_families::{aq5_family, base_family};
use aqcist::lifting::construct_cists;
use aqcist::verification::{
    bruteforce_edge_lists, characterize_edge_lists, verify_edge_lists, Condition, Status, Witness,
    DEFAULT_BRUTEFORCE_MAX_N,
};
use aqcist::{verify_family, CistFamily, Edge, Mode, Provenance, SpanningTree};
use common::Corruption;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn first_failure(lists: &[Vec<(u32, u32)>], n: u8, brute: bool) -> (Condition, Option<Witness>) {
    let edges = common::to_edges(lists);
    let report = if brute {
        bruteforce_edge_lists(n, &edges, DEFAULT_BRUTEFORCE_MAX_N).unwrap()
    } else {
        characterize_edge_lists(n, &edges).unwrap()
    };
    let c = report.first_failure().expect("expected a failure");
    (c.condition, c.witness.clone())
}

#[test]
fn duplicate_edge_in_second_tree() {
    // <1,2> (values 0 and 1) belongs to T_1; put it into T_2 as well, dropping
    // an edge of the cycle it closes so T_2 stays a spanning tree
    let f = aq5_family();
    let mut lists = common::family_pairs(&f);
    assert!(lists[0].contains(&(0, 1)) && !lists[1].contains(&(0, 1)));
    let adj = common::adjacency(5, &lists[1]);
    let (_, parent) = common::bfs(&adj, 0);
    let drop = (parent[1].min(1), parent[1].max(1));
    lists[1].retain(|&e| e != drop);
    lists[1].push((0, 1));
    assert!(common::is_spanning_tree(5, &lists[1]));

    let (cond, witness) = first_failure(&lists, 5, false);
    assert_eq!(cond, Condition::EdgeDisjoint);
    assert_eq!(
        witness,
        Some(Witness::SharedEdge {
            edge: Edge::new(0, 1),
            trees: [1, 2]
        })
    );
    let report =
        verify_edge_lists(5, &common::to_edges(&lists), Mode::Both, Default::default()).unwrap();
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn vertex_17_internal_twice() {
    // 10000 (paper label 17) is internal in T_1 only; make it internal in T_2
    // by hanging a leaf of T_2 from it through an edge T_1 does not use
    let f = aq5_family();
    let mut lists = common::family_pairs(&f);
    let v = 16u32;
    assert!(f.tree(0).is_internal(v) && !f.tree(1).is_internal(v));
    let used: BTreeSet<(u32, u32)> = lists.iter().flatten().copied().collect();
    let t2_adj = common::adjacency(5, &lists[1]);
    let mut done = false;
    for w in aqcist::topology::neighbor_values(v, 5) {
        let e = (v.min(w), v.max(w));
        if used.contains(&e) || t2_adj[w as usize].len() != 1 || t2_adj[w as usize][0] == v {
            continue;
        }
        // w is a leaf of T_2; re-hang it from v
        let old = t2_adj[w as usize][0];
        lists[1].retain(|&x| x != (old.min(w), old.max(w)));
        lists[1].push(e);
        done = true;
        break;
    }
    assert!(done, "no re-hanging edge found");
    assert!(common::is_spanning_tree(5, &lists[1]));
    let (cond, witness) = first_failure(&lists, 5, false);
    assert_eq!(cond, Condition::InternalOverlap);
    match witness {
        Some(Witness::SharedInternal { vertex, .. }) => {
            // the replayed degrees confirm the vertex is internal twice
            let count = lists
                .iter()
                .filter(|l| common::adjacency(5, l)[vertex as usize].len() > 1)
                .count();
            assert!(count >= 2);
        }
        other => panic!("unexpected witness {other:?}"),
    }
    assert!(!common::is_cist_family(5, &lists));
    let (bcond, _) = first_failure(&lists, 5, true);
    assert!(matches!(
        bcond,
        Condition::PathVertexIntersection | Condition::PathEdgeIntersection
    ));
}

#[test]
fn monotone_corruption() {
    let f = aq5_family();
    let base = common::family_pairs(&f);
    let all: Vec<(u32, u32)> = common::edges_by_definition(5).into_iter().collect();
    for i in 0..base.len() {
        for e in 0..base[i].len() {
            let mut lists = base.clone();
            lists[i].remove(e);
            assert_eq!(first_failure(&lists, 5, false).0, Condition::Spanning);
            assert_eq!(first_failure(&lists, 5, true).0, Condition::Spanning);
        }
        // swap a tree edge for a non-tree edge inside one side: closes a cycle
        let mut lists = base.clone();
        let removed = lists[i].remove(0);
        let adj = common::adjacency(5, &lists[i]);
        // take the bigger side so it has a spare edge
        let (d0, _) = common::bfs(&adj, removed.0);
        let (d1, _) = common::bfs(&adj, removed.1);
        let size = |d: &[Option<u32>]| d.iter().flatten().count();
        let dist = if size(&d0) >= size(&d1) { d0 } else { d1 };
        let inside = all
            .iter()
            .find(|&&(a, b)| {
                dist[a as usize].is_some()
                    && dist[b as usize].is_some()
                    && !lists[i].contains(&(a, b))
            })
            .copied()
            .unwrap();
        lists[i].push(inside);
        assert_eq!(first_failure(&lists, 5, false).0, Condition::Acyclic);
        assert_eq!(first_failure(&lists, 5, true).0, Condition::Acyclic);
    }
}

#[test]
fn modes_agree_with_definition_under_corruption() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tree_shaped = 0;
    for round in 0..160 {
        let n = [3u8, 4, 5][round % 3];
        let f = base_family(n).unwrap();
        let mut lists = common::family_pairs(&f);
        let kind = common::CORRUPTIONS[(round / 3) % 4];
        common::corrupt(n, &mut lists, kind, &mut rng);
        let edges = common::to_edges(&lists);
        let ch = characterize_edge_lists(n, &edges).unwrap();
        let bf = bruteforce_edge_lists(n, &edges, DEFAULT_BRUTEFORCE_MAX_N).unwrap();
        let truth = common::is_cist_family(n, &lists);
        assert_eq!(ch.passed(), truth, "round {round} {kind:?}");
        assert_eq!(bf.passed(), truth, "round {round} {kind:?}");
        if lists.iter().all(|l| common::is_spanning_tree(n, l)) {
            tree_shaped += 1;
        }
    }
    assert!(
        tree_shaped >= 60,
        "only {tree_shaped} variants kept spanning trees"
    );
}

#[test]
fn witnesses_replay() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..60 {
        let mut lists = common::family_pairs(&aq5_family());
        let kind = [Corruption::Duplicate, Corruption::TreeSwap][round % 2];
        common::corrupt(5, &mut lists, kind, &mut rng);
        for brute in [false, true] {
            let edges = common::to_edges(&lists);
            let report = if brute {
                bruteforce_edge_lists(5, &edges, 6).unwrap()
            } else {
                characterize_edge_lists(5, &edges).unwrap()
            };
            let Some(check) = report.first_failure() else {
                continue;
            };
            let again = if brute {
                bruteforce_edge_lists(5, &edges, 6).unwrap()
            } else {
                characterize_edge_lists(5, &edges).unwrap()
            };
            assert_eq!(again, report);
            replay(
                &lists,
                check.witness.as_ref().expect("failures carry witnesses"),
            );
        }
    }
}

fn replay(lists: &[Vec<(u32, u32)>], w: &Witness) {
    let has = |t: usize, e: Edge| lists[t - 1].contains(&(e.lo(), e.hi()));
    match w {
        Witness::SharedEdge { edge, trees } => {
            assert!(trees[0] < trees[1]);
            assert!(has(trees[0], *edge) && has(trees[1], *edge));
        }
        Witness::SharedInternal { vertex, trees } => {
            for &t in trees {
                assert!(common::adjacency(5, &lists[t - 1])[*vertex as usize].len() > 1);
            }
        }
        Witness::PathPair {
            u,
            v,
            trees,
            paths,
            shared,
        } => {
            assert!(!shared.is_empty());
            for (p, &t) in paths.iter().zip(trees) {
                assert_eq!((p[0], *p.last().unwrap()), (*u, *v));
                assert!(p.windows(2).all(|w| has(t, Edge::new(w[0], w[1]))));
                let distinct: BTreeSet<_> = p.iter().collect();
                assert_eq!(distinct.len(), p.len());
            }
            for x in shared {
                assert!(paths[0].contains(x) && paths[1].contains(x));
            }
        }
        other => panic!("structural witness on a tree-shaped family: {other:?}"),
    }
}

#[test]
fn identical_trees_share_edges() {
    let t = aq5_family().tree(0).clone();
    let lists = vec![common::edge_pairs(&t), common::edge_pairs(&t)];
    assert_eq!(first_failure(&lists, 5, true).0, Condition::EdgeDisjoint);
    assert_eq!(first_failure(&lists, 5, false).0, Condition::EdgeDisjoint);
}

#[test]
fn families_pass_and_report_stats() {
    for n in 3..=6u32 {
        let f = construct_cists(n).unwrap();
        let r = verify_family(&f, Mode::Both).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.stats.diameters, f.diameters());
        let size = 1u64 << n;
        assert_eq!(r.stats.pairs_checked, Some(size * (size - 1) / 2));
        assert!(r.checks.iter().all(|c| c.status == Status::Pass));
    }
    let f8 = construct_cists(8).unwrap();
    assert!(verify_family(&f8, Mode::Characterization).unwrap().passed());
    assert!(verify_family(&f8, Mode::BruteForce).is_err());
}

#[test]
fn report_json_shape() {
    let r = verify_family(&aq5_family(), Mode::Both).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["verdict", "mode", "n", "k", "checks", "stats"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["stats"]["diameters"], serde_json::json!([8, 8, 6, 6]));
    assert_eq!(v["checks"].as_array().unwrap().len(), 7);
}

#[test]
fn single_tree_family() {
    let t = SpanningTree::from_edges(1, [(0u32, 1u32)]).unwrap();
    let f = CistFamily::new(vec![t], Provenance::Search).unwrap();
    assert!(verify_family(&f, Mode::Both).unwrap().passed());
}
