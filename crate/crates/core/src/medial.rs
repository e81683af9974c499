//! Medial graphs with their canonical checkerboard structure, brute-force
//! enumeration of k-valuations, and the oracle counts built on them.
//!
//! The medial graph of an edge-point ribbon graph has one 4-valent vertex per
//! edge (flagged singular for pinched edges), one medial edge per vertex
//! corner of the underlying graph, and one free-loop per isolated vertex.
//! The four slots of a medial vertex are the corner flags of its edge, so the
//! three perfect pairings of the slots are determined locally: black groups
//! the two slots at each end, white follows the two side arcs (twist-aware by
//! construction), and crossing is the remaining pairing.

use crate::ribbon::{Dart, EdgeId, EdgePointRibbonGraph, RibbonGraph, VertexId};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Classification of the colours at a non-singular medial vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexConfig {
    White,
    Black,
    Crossing,
    Total,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ConfigTally {
    /// Non-singular total vertices only.
    pub total: u32,
    pub white: u32,
    pub black: u32,
    pub crossing: u32,
}

/// A colouring of the medial edges and free-loops in `1..=k` satisfying the
/// evenness condition at every vertex and monochromaticity at singular ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KValuation {
    pub medial_colours: Vec<u32>,
    pub free_loop_colours: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintViolation {
    pub edge: EdgeId,
}

impl std::fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "colour constraint violated at the medial vertex of {}",
            self.edge
        )
    }
}

impl std::error::Error for ConstraintViolation {}

/// One medial edge, crossing one vertex corner of the underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedialEdge {
    pub id: usize,
    pub corner: (VertexId, Dart, Dart),
    /// The two (medial vertex, slot) ends.
    pub endpoints: [(EdgeId, usize); 2],
}

#[derive(Debug, Clone)]
pub struct MedialGraph {
    /// Medial vertices in edge-id order.
    vertex_edges: Vec<EdgeId>,
    vertex_index: BTreeMap<EdgeId, usize>,
    singular: Vec<bool>,
    twisted: Vec<bool>,
    /// Per medial vertex, the medial edge bound to each of the four slots.
    /// Slot `2*end + side` is the flag of the edge's dart `end` on side
    /// `side` (0 = R, 1 = L).
    slots: Vec<[usize; 4]>,
    edges: Vec<MedialEdge>,
    free_loops: Vec<VertexId>,
}

impl MedialGraph {
    pub fn build(h: &EdgePointRibbonGraph) -> MedialGraph {
        let g = &h.underlying;
        let vertex_edges: Vec<EdgeId> = g.edge_ids().collect();
        let vertex_index: BTreeMap<EdgeId, usize> = vertex_edges
            .iter()
            .enumerate()
            .map(|(i, e)| (*e, i))
            .collect();
        let singular = vertex_edges
            .iter()
            .map(|e| h.singular.contains(e))
            .collect();
        let twisted = vertex_edges.iter().map(|e| g.is_twisted(*e)).collect();
        let mut slots = vec![[usize::MAX; 4]; vertex_edges.len()];
        let mut edges = Vec::new();
        let mut free_loops = Vec::new();

        let slot_of = |d: Dart, side: usize| -> (usize, usize) {
            (vertex_index[&d.edge()], 2 * (d.end() as usize) + side)
        };
        for (v, rot) in g.vertices.iter() {
            if rot.is_empty() {
                free_loops.push(*v);
                continue;
            }
            let n = rot.len();
            for i in 0..n {
                let a = rot[i];
                let b = rot[(i + 1) % n];
                let id = edges.len();
                // the corner medial edge joins flag L(a) to flag R(b)
                let end_a = slot_of(a, 1);
                let end_b = slot_of(b, 0);
                slots[end_a.0][end_a.1] = id;
                slots[end_b.0][end_b.1] = id;
                edges.push(MedialEdge {
                    id,
                    corner: (*v, a, b),
                    endpoints: [(a.edge(), end_a.1), (b.edge(), end_b.1)],
                });
            }
        }
        debug_assert!(slots.iter().all(|s| s.iter().all(|m| *m != usize::MAX)));

        MedialGraph {
            vertex_edges,
            vertex_index,
            singular,
            twisted,
            slots,
            edges,
            free_loops,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_edges.len()
    }

    pub fn num_medial_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_free_loops(&self) -> usize {
        self.free_loops.len()
    }

    pub fn medial_edges(&self) -> &[MedialEdge] {
        &self.edges
    }

    pub fn free_loops(&self) -> &[VertexId] {
        &self.free_loops
    }

    pub fn vertex_edge_ids(&self) -> &[EdgeId] {
        &self.vertex_edges
    }

    pub fn is_singular_vertex(&self, e: EdgeId) -> bool {
        self.singular[self.vertex_index[&e]]
    }

    /// Slot pairs of one of the three pairings at a medial vertex.
    pub fn pairing(&self, e: EdgeId, config: VertexConfig) -> [(usize, usize); 2] {
        let twisted = self.twisted[self.vertex_index[&e]];
        match (config, twisted) {
            (VertexConfig::Black, _) => [(0, 1), (2, 3)],
            (VertexConfig::White, false) => [(0, 3), (1, 2)],
            (VertexConfig::White, true) => [(0, 2), (1, 3)],
            (VertexConfig::Crossing, false) => [(0, 2), (1, 3)],
            (VertexConfig::Crossing, true) => [(0, 3), (1, 2)],
            (VertexConfig::Total, _) => panic!("total is not a pairing"),
        }
    }

    fn slot_colours(&self, medial_colours: &[u32], idx: usize) -> [u32; 4] {
        let s = &self.slots[idx];
        [
            medial_colours[s[0]],
            medial_colours[s[1]],
            medial_colours[s[2]],
            medial_colours[s[3]],
        ]
    }

    fn classify_index(&self, medial_colours: &[u32], idx: usize) -> Option<VertexConfig> {
        let c = self.slot_colours(medial_colours, idx);
        if c[0] == c[1] && c[1] == c[2] && c[2] == c[3] {
            return Some(VertexConfig::Total);
        }
        for config in [
            VertexConfig::White,
            VertexConfig::Black,
            VertexConfig::Crossing,
        ] {
            let pairs = self.pairing(self.vertex_edges[idx], config);
            if pairs.iter().all(|(i, j)| c[*i] == c[*j]) {
                return Some(config);
            }
        }
        None
    }

    /// Classifies the colours of a valuation at one medial vertex.
    pub fn classify_vertex(
        &self,
        phi: &KValuation,
        e: EdgeId,
    ) -> Result<VertexConfig, ConstraintViolation> {
        let idx = self.vertex_index[&e];
        self.classify_index(&phi.medial_colours, idx)
            .ok_or(ConstraintViolation { edge: e })
    }

    /// Streams every k-valuation with its configuration tally, each exactly
    /// once, in colour-lexicographic order.
    pub fn for_each_k_valuation<F>(&self, k: u32, mut visit: F)
    where
        F: FnMut(&[u32], &[u32], &ConfigTally),
    {
        if k == 0 {
            return;
        }
        // a vertex is checkable once the highest medial edge over its slots
        // is coloured
        let mut completes_at: Vec<Vec<usize>> = vec![Vec::new(); self.edges.len().max(1)];
        for idx in 0..self.vertex_edges.len() {
            let last = *self.slots[idx].iter().max().unwrap();
            completes_at[last].push(idx);
        }
        let mut medial_colours = vec![0u32; self.edges.len()];
        let mut free_colours = vec![0u32; self.free_loops.len()];
        let mut tally = ConfigTally::default();
        self.dfs_medial(
            k,
            0,
            &completes_at,
            &mut medial_colours,
            &mut free_colours,
            &mut tally,
            &mut visit,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs_medial<F>(
        &self,
        k: u32,
        pos: usize,
        completes_at: &[Vec<usize>],
        medial_colours: &mut Vec<u32>,
        free_colours: &mut Vec<u32>,
        tally: &mut ConfigTally,
        visit: &mut F,
    ) where
        F: FnMut(&[u32], &[u32], &ConfigTally),
    {
        if pos == self.edges.len() {
            self.dfs_free(k, 0, medial_colours, free_colours, tally, visit);
            return;
        }
        for colour in 1..=k {
            medial_colours[pos] = colour;
            let mut ok = true;
            let before = *tally;
            for &idx in &completes_at[pos] {
                match self.classify_index(medial_colours, idx) {
                    None => {
                        ok = false;
                        break;
                    }
                    Some(config) => {
                        if self.singular[idx] {
                            if config != VertexConfig::Total {
                                ok = false;
                                break;
                            }
                        } else {
                            match config {
                                VertexConfig::Total => tally.total += 1,
                                VertexConfig::White => tally.white += 1,
                                VertexConfig::Black => tally.black += 1,
                                VertexConfig::Crossing => tally.crossing += 1,
                            }
                        }
                    }
                }
            }
            if ok {
                self.dfs_medial(
                    k,
                    pos + 1,
                    completes_at,
                    medial_colours,
                    free_colours,
                    tally,
                    visit,
                );
            }
            *tally = before;
        }
    }

    fn dfs_free<F>(
        &self,
        k: u32,
        pos: usize,
        medial_colours: &mut Vec<u32>,
        free_colours: &mut Vec<u32>,
        tally: &ConfigTally,
        visit: &mut F,
    ) where
        F: FnMut(&[u32], &[u32], &ConfigTally),
    {
        if pos == self.free_loops.len() {
            visit(medial_colours, free_colours, tally);
            return;
        }
        for colour in 1..=k {
            free_colours[pos] = colour;
            self.dfs_free(k, pos + 1, medial_colours, free_colours, tally, visit);
        }
    }

    /// Collects the full valuation list; intended for small instances.
    pub fn enumerate_k_valuations(&self, k: u32) -> Vec<(KValuation, ConfigTally)> {
        let mut out = Vec::new();
        self.for_each_k_valuation(k, |medial, free, tally| {
            out.push((
                KValuation {
                    medial_colours: medial.to_vec(),
                    free_loop_colours: free.to_vec(),
                },
                *tally,
            ));
        });
        out
    }
}

fn ipow(base: i64, exp: u32) -> BigInt {
    let mut out = BigInt::one();
    let b = BigInt::from(base);
    for _ in 0..exp {
        out *= &b;
    }
    out
}

/// The weighted k-valuation count `sum w^total x^white y^black z^crossing`
/// over all k-valuations of the medial graph of `h`.
pub fn omega_k_bruteforce(
    h: &EdgePointRibbonGraph,
    k: u32,
    w: i64,
    x: i64,
    y: i64,
    z: i64,
) -> BigInt {
    let m = MedialGraph::build(h);
    let mut sum = BigInt::zero();
    m.for_each_k_valuation(k, |_, _, tally| {
        sum += ipow(w, tally.total)
            * ipow(x, tally.white)
            * ipow(y, tally.black)
            * ipow(z, tally.crossing);
    });
    sum
}

pub fn count_k_valuations(h: &EdgePointRibbonGraph, k: u32) -> BigInt {
    omega_k_bruteforce(h, k, 1, 1, 1, 1)
}

/// Number of k-valuations without black configurations.
pub fn admissible_count(g: &RibbonGraph, k: u32) -> BigInt {
    let h: EdgePointRibbonGraph = g.clone().into();
    let m = MedialGraph::build(&h);
    let mut count = BigInt::zero();
    m.for_each_k_valuation(k, |_, _, tally| {
        if tally.black == 0 {
            count += 1;
        }
    });
    count
}

/// The transition polynomial evaluated at integers, computed by smoothing
/// each medial vertex into one of its three pairings and counting the closed
/// curves with union-find over the slots. This path never traces ribbon
/// boundaries, so it is an independent check on the Ω engines.
pub fn transition_poly_bruteforce(
    g: &RibbonGraph,
    alpha: i64,
    beta: i64,
    gamma: i64,
    t_val: i64,
) -> BigInt {
    let h: EdgePointRibbonGraph = g.clone().into();
    let m = MedialGraph::build(&h);
    let n = m.num_vertices();
    let mut sum = BigInt::zero();
    let mut choice = vec![0u8; n];
    loop {
        // weight of this smoothing
        let mut weight = BigInt::one();
        for c in &choice {
            weight *= match c {
                0 => BigInt::from(alpha),
                1 => BigInt::from(beta),
                _ => BigInt::from(gamma),
            };
        }
        if !weight.is_zero() {
            let mut uf = crate::ribbon::UnionFind::new(4 * n);
            for (idx, c) in choice.iter().enumerate() {
                let config = match c {
                    0 => VertexConfig::White,
                    1 => VertexConfig::Black,
                    _ => VertexConfig::Crossing,
                };
                for (i, j) in m.pairing(m.vertex_edges[idx], config) {
                    uf.union(4 * idx + i, 4 * idx + j);
                }
            }
            for me in m.medial_edges() {
                let (e0, s0) = me.endpoints[0];
                let (e1, s1) = me.endpoints[1];
                uf.union(4 * m.vertex_index[&e0] + s0, 4 * m.vertex_index[&e1] + s1);
            }
            let curves = if n == 0 { 0 } else { uf.count() } + m.num_free_loops();
            sum += weight * ipow(t_val, curves as u32);
        }
        // next choice vector
        let mut i = 0;
        loop {
            if i == n {
                return sum;
            }
            choice[i] += 1;
            if choice[i] < 3 {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}
