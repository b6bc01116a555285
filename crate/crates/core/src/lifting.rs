//! Doubling CIST families from AQ_n to AQ_{n+1}.
//!
//! Each tree is copied into the `0`-prefixed and `1`-prefixed halves of
//! AQ_{n+1} and the copies are joined by the hypercube edge between the two
//! images of the tree's center. Centers are internal and the internal-vertex
//! sets of a CIST family are disjoint, so the joined trees stay CISTs and
//! the connector edges are pairwise distinct.

use rayon::prelude::*;

use crate::base_families::base_family;
use crate::error::{Error, Result};
use crate::family::{CistFamily, Provenance};
use crate::topology::{Edge, VertexId, MAX_DIM};
use crate::tree::SpanningTree;
use crate::verification::verify_characterization;

/// Default largest dimension that is fully materialized.
pub const DEFAULT_MAX_N: u8 = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftOptions {
    /// Largest dimension a lift may produce.
    pub max_n: u8,
    /// Allow lifting families on AQ_3 or AQ_4. The default pipeline only
    /// lifts from AQ_5 upward.
    pub allow_small_base: bool,
}

impl Default for LiftOptions {
    fn default() -> Self {
        LiftOptions {
            max_n: DEFAULT_MAX_N,
            allow_small_base: false,
        }
    }
}

/// The connector `(0·c, 1·c)` where `c` is the tree's center.
pub fn connector_edge(t: &SpanningTree) -> Result<(VertexId, VertexId)> {
    let diameter = t.diameter();
    if diameter < 2 {
        return Err(Error::DegenerateTree { diameter });
    }
    let c = t.center();
    Ok((c.prefixed(false)?, c.prefixed(true)?))
}

/// Two prefixed copies of `t` plus the connector edge.
pub fn lift_tree(t: &SpanningTree) -> Result<SpanningTree> {
    let (u, v) = connector_edge(t)?;
    let n = t.n();
    let high = 1u32 << n;
    let mut edges = Vec::with_capacity(2 * t.edges().len() + 1);
    edges.extend_from_slice(t.edges());
    edges.push(Edge::new(u.bits(), v.bits()));
    edges.extend(
        t.edges()
            .iter()
            .map(|e| Edge::new(e.lo() | high, e.hi() | high)),
    );
    edges.sort_unstable();
    Ok(SpanningTree::from_sorted_unchecked(n + 1, edges))
}

/// Lifts every tree of a verified family one dimension up.
pub fn lift_family(f: &CistFamily, opts: LiftOptions) -> Result<CistFamily> {
    let n = f.n();
    let min_n = if opts.allow_small_base { 3 } else { 5 };
    if n < min_n {
        return Err(Error::DimensionOutOfRange {
            n: n as u32,
            min: min_n as u32,
            max: opts.max_n as u32 - 1,
        });
    }
    if n + 1 > opts.max_n.min(MAX_DIM) {
        return Err(Error::DimensionOutOfRange {
            n: n as u32 + 1,
            min: min_n as u32 + 1,
            max: opts.max_n.min(MAX_DIM) as u32,
        });
    }
    let report = verify_characterization(f)?;
    if !report.passed() {
        let why = report
            .first_failure()
            .map(|c| c.condition.as_str().to_string())
            .unwrap_or_default();
        return Err(Error::NotCist(why));
    }
    let trees = f
        .trees()
        .par_iter()
        .map(lift_tree)
        .collect::<Result<Vec<_>>>()?;
    CistFamily::new(trees, Provenance::Lifted)
}

/// `n - 1` CISTs for n in 3..=5; four CISTs for n >= 6, lifted from the
/// AQ_5 family.
pub fn construct_cists(n: u32) -> Result<CistFamily> {
    construct_cists_with(n, LiftOptions::default())
}

pub fn construct_cists_with(n: u32, opts: LiftOptions) -> Result<CistFamily> {
    if n < 3 {
        return Err(Error::Unsupported { n });
    }
    let cap = opts.max_n.min(MAX_DIM) as u32;
    if n > cap {
        return Err(Error::DimensionOutOfRange {
            n,
            min: 3,
            max: cap,
        });
    }
    if n <= 5 {
        return base_family(n as u8);
    }
    let mut family = base_family(5)?;
    for _ in 5..n {
        family = lift_family(&family, opts)?;
    }
    Ok(family)
}
