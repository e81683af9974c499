//! The two evaluation engines for Ω.
//!
//! The state-sum engine evaluates one term per ordered four-way partition of
//! the non-singular edges, reading off the pinched boundary count of each
//! fully reduced object. The recursive engine expands one edge at a time into
//! the four branches (contract to a point, contract, delete,
//! Penrose-contract) down to edgeless objects, memoizing on the exact labeled
//! structure. The two engines share no evaluation code and are each other's
//! primary oracle.

use crate::catalog::SplitMix64;
use crate::ops::EdgeOp;
use crate::poly::{MultiPoly, Var};
use crate::ribbon::{EdgeId, EdgePointRibbonGraph};
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt;

pub const DEFAULT_STATE_SUM_EDGE_LIMIT: usize = 14;

const PAR_THRESHOLD_EDGES: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    StateSum,
    Recursive,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Partitions evaluated by the state sum, or recursion nodes visited.
    pub evaluated: u64,
    pub cache_hits: u64,
}

#[derive(Debug, Clone)]
pub struct OmegaResult {
    pub polynomial: MultiPoly,
    pub method: Method,
    pub stats: EngineStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    TooManyEdges { edges: usize, limit: usize },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::TooManyEdges { edges, limit } => write!(
                f,
                "state sum over {edges} edges exceeds the configured limit of {limit}"
            ),
        }
    }
}

impl std::error::Error for EngineError {}

/// Edge selection strategy for the recursive engine. Every strategy yields
/// the same polynomial; they differ only in the shape of the recursion tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrder {
    /// Prefer a non-loop edge, keeping intermediate vertices small.
    NonLoopFirst,
    ById,
    Seeded(u64),
}

const OPS: [EdgeOp; 4] = [
    EdgeOp::ContractToPoint,
    EdgeOp::Contract,
    EdgeOp::Delete,
    EdgeOp::PenroseContract,
];

fn state_sum_term(h: &EdgePointRibbonGraph, edges: &[EdgeId], code: u64) -> [u16; 5] {
    let mut counts = [0u16; 4];
    let mut g = h.clone();
    // contract-to-point first, then contraction, deletion, Penrose-contraction
    for (rank, op) in OPS.iter().enumerate() {
        for (i, e) in edges.iter().enumerate() {
            if ((code >> (2 * i)) & 3) as usize == rank {
                counts[rank] += 1;
                g = g.apply_edge_op(*e, *op).expect("partition op must apply");
            }
        }
    }
    let boundary = g.pinched_boundary_count() as u16;
    [counts[0], counts[1], counts[2], counts[3], boundary]
}

pub fn omega_state_sum(h: &EdgePointRibbonGraph) -> Result<OmegaResult, EngineError> {
    omega_state_sum_limited(h, DEFAULT_STATE_SUM_EDGE_LIMIT)
}

/// Evaluates the sum over all `4^m` ordered partitions of the `m` non-singular
/// edges. Partitions are enumerated by a base-4 counter in edge id order and
/// may be evaluated in parallel; the reduction is an exact commutative sum,
/// so the result is identical to serial evaluation.
pub fn omega_state_sum_limited(
    h: &EdgePointRibbonGraph,
    max_edges: usize,
) -> Result<OmegaResult, EngineError> {
    let edges = h.non_singular_edges();
    let m = edges.len();
    if m > max_edges {
        return Err(EngineError::TooManyEdges {
            edges: m,
            limit: max_edges,
        });
    }
    let total: u64 = 1u64 << (2 * m);
    let one = BigInt::one();
    let polynomial = if m >= PAR_THRESHOLD_EDGES {
        (0..total)
            .into_par_iter()
            .fold(MultiPoly::zero, |mut acc, code| {
                acc.add_term(state_sum_term(h, &edges, code), one.clone());
                acc
            })
            .reduce(MultiPoly::zero, |a, b| &a + &b)
    } else {
        let mut acc = MultiPoly::zero();
        for code in 0..total {
            acc.add_term(state_sum_term(h, &edges, code), one.clone());
        }
        acc
    };
    Ok(OmegaResult {
        polynomial,
        method: Method::StateSum,
        stats: EngineStats {
            evaluated: total,
            cache_hits: 0,
        },
    })
}

pub fn omega_recursive(h: &EdgePointRibbonGraph) -> OmegaResult {
    omega_recursive_ordered(h, EdgeOrder::NonLoopFirst)
}

pub fn omega_recursive_ordered(h: &EdgePointRibbonGraph, order: EdgeOrder) -> OmegaResult {
    let mut memo: HashMap<Vec<u8>, MultiPoly> = HashMap::new();
    let mut stats = EngineStats::default();
    let mut rng = match order {
        EdgeOrder::Seeded(seed) => Some(SplitMix64::new(seed)),
        _ => None,
    };
    let polynomial = recurse(h, order, &mut memo, &mut rng, &mut stats);
    OmegaResult {
        polynomial,
        method: Method::Recursive,
        stats,
    }
}

fn pick_edge(
    h: &EdgePointRibbonGraph,
    edges: &[EdgeId],
    order: EdgeOrder,
    rng: &mut Option<SplitMix64>,
) -> EdgeId {
    match order {
        EdgeOrder::ById => edges[0],
        EdgeOrder::Seeded(_) => {
            let rng = rng.as_mut().unwrap();
            edges[rng.below(edges.len() as u64) as usize]
        }
        EdgeOrder::NonLoopFirst => edges
            .iter()
            .copied()
            .find(|e| !h.underlying.is_loop(*e))
            .unwrap_or(edges[0]),
    }
}

fn recurse(
    h: &EdgePointRibbonGraph,
    order: EdgeOrder,
    memo: &mut HashMap<Vec<u8>, MultiPoly>,
    rng: &mut Option<SplitMix64>,
    stats: &mut EngineStats,
) -> MultiPoly {
    stats.evaluated += 1;
    let key = h.canonical_bytes();
    if let Some(p) = memo.get(&key) {
        stats.cache_hits += 1;
        return p.clone();
    }
    let edges = h.non_singular_edges();
    let result = if edges.is_empty() {
        MultiPoly::monomial(Var::T, h.component_count() as u16)
    } else {
        let e = pick_edge(h, &edges, order, rng);
        let one = BigInt::one();
        let mut acc = MultiPoly::zero();
        for (var, op) in [
            (Var::W, EdgeOp::ContractToPoint),
            (Var::X, EdgeOp::Contract),
            (Var::Y, EdgeOp::Delete),
            (Var::Z, EdgeOp::PenroseContract),
        ] {
            let branch = h.apply_edge_op(e, op).expect("edge is operable");
            let sub = recurse(&branch, order, memo, rng, stats);
            let mut exps = [0u16; 5];
            exps[var.index()] = 1;
            acc = &acc + &sub.mul_monomial(exps, &one);
        }
        acc
    };
    memo.insert(key, result.clone());
    result
}

/// Ω by the recursive engine; just the polynomial.
pub fn omega(h: &EdgePointRibbonGraph) -> MultiPoly {
    omega_recursive(h).polynomial
}

/// The k-valuation generating function as a polynomial: substitute
/// `w -> w - x - y - z` in Ω; `t` plays the role of k.
pub fn omega_k_polynomial(h: &EdgePointRibbonGraph) -> MultiPoly {
    omega(h).subst_w()
}
