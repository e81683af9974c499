//! Named specializations of Ω and the classical polynomials used to verify
//! them: the pointed and topological Penrose polynomials, chromatic and Tutte
//! polynomials by deletion-contraction, proper edge 3-colouring counts, and
//! the chromatic sums over partial Petrials of the geometric dual.

use crate::omega::omega;
use crate::poly::{MultiPoly, Var};
use crate::ribbon::{EdgePointRibbonGraph, RibbonGraph};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A multigraph with loops: what remains of a ribbon graph after forgetting
/// rotations and twists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractGraph {
    vertices: BTreeSet<u32>,
    edges: BTreeMap<u32, (u32, u32)>,
}

impl AbstractGraph {
    pub fn new(n_vertices: u32, edges: &[(u32, u32)]) -> AbstractGraph {
        let mut vertices: BTreeSet<u32> = (0..n_vertices).collect();
        let mut map = BTreeMap::new();
        for (i, (u, v)) in edges.iter().enumerate() {
            vertices.insert(*u);
            vertices.insert(*v);
            map.insert(i as u32, (*u, *v));
        }
        AbstractGraph {
            vertices,
            edges: map,
        }
    }

    pub fn from_ribbon(g: &RibbonGraph) -> AbstractGraph {
        let vertex_of = g.vertex_of_darts();
        let mut edges = BTreeMap::new();
        for e in g.edge_ids() {
            let u = vertex_of[&crate::ribbon::Dart::new(e, 0)];
            let v = vertex_of[&crate::ribbon::Dart::new(e, 1)];
            edges.insert(e.0, (u.0, v.0));
        }
        AbstractGraph {
            vertices: g.vertex_ids().map(|v| v.0).collect(),
            edges,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_loop(&self, e: u32) -> bool {
        let (u, v) = self.edges[&e];
        u == v
    }

    fn delete(&self, e: u32) -> AbstractGraph {
        let mut out = self.clone();
        out.edges.remove(&e);
        out
    }

    fn contract(&self, e: u32) -> AbstractGraph {
        let (u, v) = self.edges[&e];
        let (keep, drop) = if u <= v { (u, v) } else { (v, u) };
        let mut out = self.delete(e);
        if keep != drop {
            out.vertices.remove(&drop);
            for ends in out.edges.values_mut() {
                if ends.0 == drop {
                    ends.0 = keep;
                }
                if ends.1 == drop {
                    ends.1 = keep;
                }
            }
        }
        out
    }

    pub fn component_count(&self) -> usize {
        let ids: Vec<u32> = self.vertices.iter().copied().collect();
        let index: BTreeMap<u32, usize> = ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut uf = crate::ribbon::UnionFind::new(ids.len());
        for (u, v) in self.edges.values() {
            uf.union(index[u], index[v]);
        }
        uf.count()
    }

    fn is_bridge(&self, e: u32) -> bool {
        !self.is_loop(e) && self.delete(e).component_count() > self.component_count()
    }

    fn key(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for v in &self.vertices {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out.push(0xff);
        for (e, (u, v)) in &self.edges {
            out.extend_from_slice(&e.to_le_bytes());
            out.extend_from_slice(&u.to_le_bytes());
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .values()
            .map(|(a, b)| (*a == v) as usize + (*b == v) as usize)
            .sum()
    }

    pub fn is_cubic(&self) -> bool {
        self.vertices.iter().all(|v| self.degree(*v) == 3)
    }
}

/// Proper vertex colouring polynomial in `t`, by deletion-contraction.
pub fn chromatic_poly(g: &AbstractGraph) -> MultiPoly {
    fn rec(g: &AbstractGraph, memo: &mut HashMap<Vec<u8>, MultiPoly>) -> MultiPoly {
        let key = g.key();
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let result = if g.edges.keys().any(|e| g.is_loop(*e)) {
            MultiPoly::zero()
        } else if let Some(&e) = g.edges.keys().next() {
            &rec(&g.delete(e), memo) - &rec(&g.contract(e), memo)
        } else {
            MultiPoly::monomial(Var::T, g.num_vertices() as u16)
        };
        memo.insert(key, result.clone());
        result
    }
    rec(g, &mut HashMap::new())
}

/// Tutte polynomial in the `x` and `y` variables, by deletion-contraction.
pub fn tutte_poly(g: &AbstractGraph) -> MultiPoly {
    fn rec(g: &AbstractGraph, memo: &mut HashMap<Vec<u8>, MultiPoly>) -> MultiPoly {
        let key = g.key();
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let result = match g.edges.keys().next() {
            None => MultiPoly::one(),
            Some(&e) => {
                if g.is_loop(e) {
                    &MultiPoly::var(Var::Y) * &rec(&g.delete(e), memo)
                } else if g.is_bridge(e) {
                    &MultiPoly::var(Var::X) * &rec(&g.contract(e), memo)
                } else {
                    &rec(&g.delete(e), memo) + &rec(&g.contract(e), memo)
                }
            }
        };
        memo.insert(key, result.clone());
        result
    }
    rec(g, &mut HashMap::new())
}

/// Number of proper edge 3-colourings: all edge-ends at a vertex distinctly
/// coloured, so any loop forces zero.
pub fn edge_3_colouring_count(g: &AbstractGraph) -> u64 {
    if g.edges.keys().any(|e| g.is_loop(*e)) {
        return 0;
    }
    let edge_ids: Vec<u32> = g.edges.keys().copied().collect();
    let index: BTreeMap<u32, usize> = edge_ids.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    // pairs of distinct edges sharing a vertex
    let mut conflicts: Vec<(usize, usize)> = Vec::new();
    for v in &g.vertices {
        let incident: Vec<usize> = g
            .edges
            .iter()
            .filter(|(_, (a, b))| a == v || b == v)
            .map(|(e, _)| index[e])
            .collect();
        for i in 0..incident.len() {
            for j in (i + 1)..incident.len() {
                conflicts.push((incident[i], incident[j]));
            }
        }
    }
    let m = edge_ids.len();
    let mut colours = vec![0u8; m];
    let mut count = 0u64;
    loop {
        if conflicts.iter().all(|(i, j)| colours[*i] != colours[*j]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == m {
                return count;
            }
            colours[i] += 1;
            if colours[i] < 3 {
                break;
            }
            colours[i] = 0;
            i += 1;
        }
    }
}

/// The pointed-Penrose polynomial `Ω(G; -2, 1, 0, 1, t)`.
pub fn pointed_penrose(h: &EdgePointRibbonGraph) -> MultiPoly {
    omega(h).eval_i64(&[(Var::W, -2), (Var::X, 1), (Var::Y, 0), (Var::Z, 1)])
}

/// The topological Penrose polynomial `Ω(G; 0, 1, 0, -1, t)`.
pub fn topological_penrose(g: &RibbonGraph) -> MultiPoly {
    let h: EdgePointRibbonGraph = g.clone().into();
    omega(&h).eval_i64(&[(Var::W, 0), (Var::X, 1), (Var::Y, 0), (Var::Z, -1)])
}

/// Sum over all edge subsets A of the chromatic polynomial of the dual of the
/// partial Petrial at A, optionally signed by `(-1)^|A|`.
pub fn petrial_chromatic_sum(g: &RibbonGraph, signed: bool) -> MultiPoly {
    let edges: Vec<crate::ribbon::EdgeId> = g.edge_ids().collect();
    let h: EdgePointRibbonGraph = g.clone().into();
    let mut sum = MultiPoly::zero();
    for mask in 0u32..(1 << edges.len()) {
        let mut petrial = h.clone();
        for (i, e) in edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                petrial = petrial.partial_petrial(*e).unwrap();
            }
        }
        let dual = petrial.underlying.geometric_dual();
        let chi = chromatic_poly(&AbstractGraph::from_ribbon(&dual));
        if signed && mask.count_ones() % 2 == 1 {
            sum = &sum - &chi;
        } else {
            sum = &sum + &chi;
        }
    }
    sum
}
