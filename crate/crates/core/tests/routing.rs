mod common;

use std::collections::BTreeSet;

use aqcist::base_families::aq5_family;
use aqcist::lifting::construct_cists;
use aqcist::routing::{disjoint_routes, route_stats, routes_are_independent, PairSample, Router};
use aqcist::{TreePath, VertexId};

/// Pairwise check written from scratch: interiors disjoint, edges disjoint.
fn independent(paths: &[TreePath]) -> bool {
    for (i, a) in paths.iter().enumerate() {
        let ia: BTreeSet<u32> = a.interior().iter().map(|v| v.bits()).collect();
        let ea: BTreeSet<(u32, u32)> = a.edges().map(|e| (e.lo(), e.hi())).collect();
        for b in &paths[i + 1..] {
            if b.interior().iter().any(|v| ia.contains(&v.bits())) {
                return false;
            }
            if b.edges().any(|e| ea.contains(&(e.lo(), e.hi()))) {
                return false;
            }
        }
    }
    true
}

#[test]
fn all_pairs_aq5() {
    let f = aq5_family();
    let router = Router::new(&f).unwrap();
    let d = f.diameters();
    for u in 0..32u32 {
        for w in u + 1..32 {
            let a = VertexId::new(u, 5).unwrap();
            let b = VertexId::new(w, 5).unwrap();
            let routes = router.routes(a, b).unwrap();
            assert_eq!(routes.len(), 4);
            assert!(independent(&routes), "{a} {b}");
            assert!(routes_are_independent(&routes));
            for (i, r) in routes.iter().enumerate() {
                assert!(r.len() as u32 <= d[i]);
                assert!(r.edges().all(|e| f.tree(i).contains_edge(e)));
            }
        }
    }
}

#[test]
fn aq6_corners() {
    let f = construct_cists(6).unwrap();
    let a = VertexId::from_binary("000000").unwrap();
    let b = VertexId::from_binary("111111").unwrap();
    let routes = disjoint_routes(&f, a, b).unwrap();
    assert_eq!(routes.len(), 4);
    assert!(routes.iter().all(|r| r.len() <= 9));
    assert!(independent(&routes));
}

#[test]
fn random_pairs_aq7() {
    let f = construct_cists(7).unwrap();
    let s = route_stats(
        &f,
        &PairSample::Random {
            count: 1000,
            seed: 3,
        },
    )
    .unwrap();
    assert_eq!(s.pairs, 1000);
    assert_eq!(s.seed, Some(3));
    assert!(s.within_diameters());
    assert!(s.max_len.iter().all(|&m| m <= 11));
    let again = route_stats(
        &f,
        &PairSample::Random {
            count: 1000,
            seed: 3,
        },
    )
    .unwrap();
    assert_eq!(again, s);
}

#[test]
fn adjacent_pairs_have_stretch_reported() {
    let s = route_stats(&aq5_family(), &PairSample::All).unwrap();
    assert_eq!(s.adjacent_pairs, 144);
    // some tree always carries the direct edge, the others detour
    assert!(s.adjacent_max_len.iter().all(|&m| m >= 1));
    assert!(s.adjacent_max_len.iter().any(|&m| m > 1));
}

#[test]
fn dimension_mismatch_rejected() {
    let f = aq5_family();
    let a = VertexId::from_binary("0000").unwrap();
    let b = VertexId::from_binary("1111").unwrap();
    assert!(disjoint_routes(&f, a, b).is_err());
}
