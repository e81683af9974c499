//! Ribbon graphs as signed rotation systems.
//!
//! A ribbon graph is stored as a set of vertices, each carrying a cyclic
//! sequence of darts, together with a set of edges. Edge `e` owns exactly the
//! two darts `2e` and `2e+1`, and carries a twist bit. An edge-point ribbon
//! graph additionally marks a subset of its edges as singular: those edges
//! have been contracted to a point, pinching the surface.
//!
//! Boundary components are traced on corner flags. Every dart has two corner
//! flags, one on each side of its attachment arc; the boundary of the surface
//! alternates between edge side arcs (joining two flags of one edge) and
//! vertex corner arcs (joining two flags at one vertex). Orbits of the
//! composite step come in direction-reversed pairs, and each pair is one
//! boundary component.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

/// A dart is one end of an edge: dart `2e` is end 1 of edge `e`, dart `2e+1`
/// is end 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub u32);

impl Dart {
    pub fn new(edge: EdgeId, end: u8) -> Dart {
        debug_assert!(end < 2);
        Dart(edge.0 * 2 + end as u32)
    }

    pub fn edge(self) -> EdgeId {
        EdgeId(self.0 / 2)
    }

    pub fn end(self) -> u8 {
        (self.0 % 2) as u8
    }

    /// The other dart of the same edge.
    pub fn partner(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0 + 1)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0 + 1)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge(), self.end() + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RibbonGraph {
    pub(crate) vertices: BTreeMap<VertexId, Vec<Dart>>,
    pub(crate) twisted: BTreeMap<EdgeId, bool>,
    pub(crate) next_vertex: u32,
}

/// A ribbon graph together with the set of edges contracted to points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgePointRibbonGraph {
    pub underlying: RibbonGraph,
    pub singular: BTreeSet<EdgeId>,
}

impl From<RibbonGraph> for EdgePointRibbonGraph {
    fn from(underlying: RibbonGraph) -> Self {
        EdgePointRibbonGraph {
            underlying,
            singular: BTreeSet::new(),
        }
    }
}

/// Rotate a cyclic sequence so its smallest dart comes first. Rotations are
/// kept in this form everywhere, which makes structural equality cyclic
/// equality.
pub(crate) fn normalize_rotation(rot: &mut [Dart]) {
    if rot.is_empty() {
        return;
    }
    let min_pos = rot
        .iter()
        .enumerate()
        .min_by_key(|(_, d)| **d)
        .map(|(i, _)| i)
        .unwrap();
    rot.rotate_left(min_pos);
}

impl RibbonGraph {
    pub fn new() -> Self {
        RibbonGraph::default()
    }

    /// Builds a graph from explicit rotations. Edges are inferred from the
    /// darts present; ids and twist flags come from the caller. Returns the
    /// diagnostics instead of the graph when the data is inconsistent.
    pub fn from_rotations(
        rotations: Vec<Vec<Dart>>,
        twisted_edges: &[EdgeId],
    ) -> Result<RibbonGraph, Vec<String>> {
        let mut edges: BTreeMap<EdgeId, bool> = BTreeMap::new();
        for rot in &rotations {
            for d in rot {
                edges.insert(d.edge(), false);
            }
        }
        for e in twisted_edges {
            edges.insert(*e, true);
        }
        let mut vertices = BTreeMap::new();
        for (i, mut rot) in rotations.into_iter().enumerate() {
            normalize_rotation(&mut rot);
            vertices.insert(VertexId(i as u32), rot);
        }
        let g = RibbonGraph {
            next_vertex: vertices.len() as u32,
            vertices,
            twisted: edges,
        };
        let diags = g.diagnostics();
        if diags.is_empty() {
            Ok(g)
        } else {
            Err(diags)
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.twisted.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.twisted.keys().copied()
    }

    pub fn rotation(&self, v: VertexId) -> Option<&[Dart]> {
        self.vertices.get(&v).map(|r| r.as_slice())
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.twisted.contains_key(&e)
    }

    pub fn is_twisted(&self, e: EdgeId) -> bool {
        self.twisted.get(&e).copied().unwrap_or(false)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices.get(&v).map(|r| r.len()).unwrap_or(0)
    }

    /// Map from every dart to its vertex.
    pub(crate) fn vertex_of_darts(&self) -> HashMap<Dart, VertexId> {
        let mut map = HashMap::new();
        for (v, rot) in &self.vertices {
            for d in rot {
                map.insert(*d, *v);
            }
        }
        map
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let map = self.vertex_of_darts();
        map.get(&Dart::new(e, 0)) == map.get(&Dart::new(e, 1))
    }

    /// Structural invariant check. Empty output means the graph is valid.
    pub fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut seen: BTreeMap<Dart, u32> = BTreeMap::new();
        for (v, rot) in &self.vertices {
            for d in rot {
                *seen.entry(*d).or_insert(0) += 1;
                if !self.twisted.contains_key(&d.edge()) {
                    out.push(format!(
                        "rotation of {v} references unknown edge {}",
                        d.edge()
                    ));
                }
            }
        }
        for (d, count) in &seen {
            if *count > 1 {
                out.push(format!("dart {d} appears in {count} rotation positions"));
            }
        }
        for e in self.twisted.keys() {
            for end in 0..2 {
                let d = Dart::new(*e, end);
                if !seen.contains_key(&d) {
                    out.push(format!("dart {d} missing from all rotations"));
                }
            }
        }
        out
    }

    fn fresh_vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_vertex);
        self.next_vertex += 1;
        v
    }

    pub(crate) fn insert_vertex(&mut self, mut rotation: Vec<Dart>) -> VertexId {
        normalize_rotation(&mut rotation);
        let v = self.fresh_vertex();
        self.vertices.insert(v, rotation);
        v
    }

    /// Reverses the rotation at `v` and toggles the twist of every edge with
    /// exactly one end there. This changes the representation but not the
    /// surface.
    pub fn flip_vertex(&self, v: VertexId) -> RibbonGraph {
        let mut g = self.clone();
        let rot = g.vertices.get_mut(&v).expect("unknown vertex");
        rot.reverse();
        normalize_rotation(rot);
        let rot = g.vertices[&v].clone();
        let mut end_count: BTreeMap<EdgeId, u32> = BTreeMap::new();
        for d in &rot {
            *end_count.entry(d.edge()).or_insert(0) += 1;
        }
        for (e, count) in end_count {
            if count == 1 {
                let t = g.twisted.get_mut(&e).unwrap();
                *t = !*t;
            }
        }
        g
    }

    /// Number of connected components; isolated vertices count.
    pub fn component_count(&self) -> usize {
        let ids: Vec<VertexId> = self.vertices.keys().copied().collect();
        let index: HashMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut uf = UnionFind::new(ids.len());
        let vertex_of = self.vertex_of_darts();
        for e in self.twisted.keys() {
            let a = vertex_of[&Dart::new(*e, 0)];
            let b = vertex_of[&Dart::new(*e, 1)];
            uf.union(index[&a], index[&b]);
        }
        uf.count()
    }

    /// Euler genus of a connected graph: `2 - |V| + |E| - boundary`.
    pub fn euler_genus(&self) -> Result<usize, crate::ops::OpError> {
        if self.component_count() != 1 {
            return Err(crate::ops::OpError::Disconnected);
        }
        let boundary = self.boundary_walks().len();
        Ok(2 + self.num_edges() - self.num_vertices() - boundary)
    }

    /// Relabels `other` past this graph's ids and merges the two vertex and
    /// edge sets.
    pub fn disjoint_union(&self, other: &RibbonGraph) -> RibbonGraph {
        let edge_shift = self.twisted.keys().map(|e| e.0 + 1).max().unwrap_or(0);
        let mut out = self.clone();
        for (e, t) in &other.twisted {
            out.twisted.insert(EdgeId(e.0 + edge_shift), *t);
        }
        for rot in other.vertices.values() {
            let shifted: Vec<Dart> = rot.iter().map(|d| Dart(d.0 + 2 * edge_shift)).collect();
            out.insert_vertex(shifted);
        }
        out
    }
}

impl EdgePointRibbonGraph {
    pub fn new() -> Self {
        EdgePointRibbonGraph::default()
    }

    pub fn num_edges(&self) -> usize {
        self.underlying.num_edges()
    }

    pub fn num_vertices(&self) -> usize {
        self.underlying.num_vertices()
    }

    pub fn non_singular_edges(&self) -> Vec<EdgeId> {
        self.underlying
            .edge_ids()
            .filter(|e| !self.singular.contains(e))
            .collect()
    }

    pub fn is_ribbon(&self) -> bool {
        self.singular.is_empty()
    }

    pub fn diagnostics(&self) -> Vec<String> {
        let mut out = self.underlying.diagnostics();
        for e in &self.singular {
            if !self.underlying.has_edge(*e) {
                out.push(format!("singular set references unknown edge {e}"));
            }
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.underlying.component_count()
    }

    /// Boundary components after identifying, for every singular edge, the
    /// walks that traverse its two side arcs.
    pub fn pinched_boundary_count(&self) -> usize {
        let walks = WalkData::trace(&self.underlying);
        let mut uf = UnionFind::new(walks.count);
        for e in &self.singular {
            uf.union(walks.arc_walk[&(*e, 1)], walks.arc_walk[&(*e, 2)]);
        }
        uf.count()
    }

    /// Serialization of the exact labeled structure, used as a memo key.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (v, rot) in &self.underlying.vertices {
            out.extend_from_slice(&v.0.to_le_bytes());
            out.extend_from_slice(&(rot.len() as u32).to_le_bytes());
            for d in rot {
                out.extend_from_slice(&d.0.to_le_bytes());
            }
        }
        out.push(0xfe);
        for (e, t) in &self.underlying.twisted {
            out.extend_from_slice(&e.0.to_le_bytes());
            out.push(*t as u8);
            out.push(self.singular.contains(e) as u8);
        }
        out
    }

    pub fn disjoint_union(&self, other: &EdgePointRibbonGraph) -> EdgePointRibbonGraph {
        let edge_shift = self
            .underlying
            .twisted
            .keys()
            .map(|e| e.0 + 1)
            .max()
            .unwrap_or(0);
        let mut singular = self.singular.clone();
        for e in &other.singular {
            singular.insert(EdgeId(e.0 + edge_shift));
        }
        EdgePointRibbonGraph {
            underlying: self.underlying.disjoint_union(&other.underlying),
            singular,
        }
    }
}

// ---------------------------------------------------------------------------
// Corner flags and boundary tracing
// ---------------------------------------------------------------------------

/// A corner flag: one endpoint of a dart's attachment arc. Flag `2d` sits on
/// the side of dart `d` where the counterclockwise vertex boundary arrives
/// (side R); flag `2d+1` on the side where it departs (side L).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Flag(pub u32);

pub(crate) const SIDE_R: u32 = 0;
pub(crate) const SIDE_L: u32 = 1;

impl Flag {
    pub fn new(d: Dart, side: u32) -> Flag {
        Flag(d.0 * 2 + side)
    }

    pub fn dart(self) -> Dart {
        Dart(self.0 / 2)
    }

    pub fn side(self) -> u32 {
        self.0 % 2
    }
}

/// Successor maps for one graph: rotation successor and predecessor per dart,
/// plus the three flag involutions.
pub(crate) struct FlagCtx {
    sigma: HashMap<Dart, Dart>,
    sigma_inv: HashMap<Dart, Dart>,
    vertex_of: HashMap<Dart, VertexId>,
    twisted: BTreeMap<EdgeId, bool>,
}

impl FlagCtx {
    pub fn new(g: &RibbonGraph) -> FlagCtx {
        let mut sigma = HashMap::new();
        let mut sigma_inv = HashMap::new();
        for rot in g.vertices.values() {
            let n = rot.len();
            for i in 0..n {
                let next = rot[(i + 1) % n];
                sigma.insert(rot[i], next);
                sigma_inv.insert(next, rot[i]);
            }
        }
        FlagCtx {
            sigma,
            sigma_inv,
            vertex_of: g.vertex_of_darts(),
            twisted: g.twisted.clone(),
        }
    }

    pub fn vertex_of(&self, d: Dart) -> VertexId {
        self.vertex_of[&d]
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[&d]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[&d]
    }

    /// Crossing the attachment arc of the dart.
    pub fn tau_vertex(&self, f: Flag) -> Flag {
        Flag(f.0 ^ 1)
    }

    /// Crossing the edge along a side arc. A twisted edge keeps the side
    /// label, an untwisted one flips it.
    pub fn tau_edge(&self, f: Flag) -> Flag {
        let d = f.dart();
        let side = if self.twisted[&d.edge()] {
            f.side()
        } else {
            f.side() ^ 1
        };
        Flag::new(d.partner(), side)
    }

    /// Moving along the vertex corner arc between consecutive darts.
    pub fn tau_corner(&self, f: Flag) -> Flag {
        if f.side() == SIDE_L {
            Flag::new(self.sigma(f.dart()), SIDE_R)
        } else {
            Flag::new(self.sigma_inv(f.dart()), SIDE_L)
        }
    }

    /// One boundary step: cross the edge, then follow the corner arc.
    pub fn boundary_next(&self, f: Flag) -> Flag {
        self.tau_corner(self.tau_edge(f))
    }
}

/// One traversal record of a boundary walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkStep {
    /// Traversal of one side arc of an edge; `side` is 1 or 2.
    Arc { edge: EdgeId, side: u8 },
    /// Traversal of the corner between two rotation-consecutive darts.
    Corner {
        vertex: VertexId,
        darts: (Dart, Dart),
    },
    /// The entire boundary circle of an isolated vertex.
    VertexCircle { vertex: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryWalk {
    pub id: usize,
    pub steps: Vec<WalkStep>,
}

/// Boundary walks plus the walk index of each (edge, side) arc, the flag at
/// which each arc's traversal starts, and the arc order along each walk.
pub(crate) struct WalkData {
    pub walks: Vec<BoundaryWalk>,
    pub arc_walk: BTreeMap<(EdgeId, u8), usize>,
    pub arc_entry: BTreeMap<(EdgeId, u8), Flag>,
    pub walk_arcs: Vec<Vec<(EdgeId, u8)>>,
    pub count: usize,
}

impl WalkData {
    pub fn trace(g: &RibbonGraph) -> WalkData {
        let ctx = FlagCtx::new(g);
        // arc side labels: the arc carrying flag R of an edge's first dart is
        // side 1, the other is side 2
        let arc_side = |f: Flag| -> (EdgeId, u8) {
            let e = f.dart().edge();
            let first = Dart::new(e, 0);
            let on_first = if f.dart() == first {
                f
            } else {
                ctx.tau_edge(f)
            };
            debug_assert_eq!(on_first.dart(), first);
            (e, if on_first.side() == SIDE_R { 1 } else { 2 })
        };

        let mut all_flags: Vec<Flag> = Vec::new();
        for e in g.twisted.keys() {
            for end in 0..2 {
                for side in [SIDE_R, SIDE_L] {
                    all_flags.push(Flag::new(Dart::new(*e, end), side));
                }
            }
        }
        all_flags.sort();

        // directed orbits of the boundary step
        let mut orbit_of: HashMap<Flag, usize> = HashMap::new();
        let mut orbits: Vec<Vec<Flag>> = Vec::new();
        for &f in &all_flags {
            if orbit_of.contains_key(&f) {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let mut cur = f;
            loop {
                orbit_of.insert(cur, id);
                orbit.push(cur);
                cur = ctx.boundary_next(cur);
                if cur == f {
                    break;
                }
            }
            orbits.push(orbit);
        }

        // pair each directed orbit with its reversal and keep one per pair
        let mut walks = Vec::new();
        let mut arc_walk = BTreeMap::new();
        let mut arc_entry = BTreeMap::new();
        let mut walk_arcs = Vec::new();
        let mut claimed = vec![false; orbits.len()];
        for (id, orbit) in orbits.iter().enumerate() {
            if claimed[id] {
                continue;
            }
            let rev_id = orbit_of[&ctx.tau_edge(orbit[0])];
            claimed[id] = true;
            claimed[rev_id] = true;

            let walk_id = walks.len();
            let mut steps = Vec::new();
            let mut arcs = Vec::new();
            for &f in orbit {
                let (e, side) = arc_side(f);
                arc_walk.insert((e, side), walk_id);
                arc_entry.insert((e, side), f);
                arcs.push((e, side));
                steps.push(WalkStep::Arc { edge: e, side });
                // the corner arc between this side arc and the next
                let arrival = ctx.tau_edge(f);
                let corner = if arrival.side() == SIDE_L {
                    (arrival.dart(), ctx.sigma(arrival.dart()))
                } else {
                    (ctx.sigma_inv(arrival.dart()), arrival.dart())
                };
                steps.push(WalkStep::Corner {
                    vertex: ctx.vertex_of(arrival.dart()),
                    darts: corner,
                });
            }
            walks.push(BoundaryWalk { id: walk_id, steps });
            walk_arcs.push(arcs);
        }

        // isolated vertices each bound one circle
        for (v, rot) in &g.vertices {
            if rot.is_empty() {
                let walk_id = walks.len();
                walks.push(BoundaryWalk {
                    id: walk_id,
                    steps: vec![WalkStep::VertexCircle { vertex: *v }],
                });
                walk_arcs.push(Vec::new());
            }
        }

        let count = walks.len();
        WalkData {
            walks,
            arc_walk,
            arc_entry,
            walk_arcs,
            count,
        }
    }
}

impl RibbonGraph {
    /// The boundary components of the surface, walk by walk.
    pub fn boundary_walks(&self) -> Vec<BoundaryWalk> {
        WalkData::trace(self).walks
    }
}

// ---------------------------------------------------------------------------
// Union-find
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let mut a = self.find(a);
        let mut b = self.find(b);
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }

    pub fn count(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&i| self.find(i) == i)
            .count()
    }
}
