//! Edge operations on edge-point ribbon graphs: deletion, contraction,
//! partial Petriality, Penrose-contraction, contraction to a point, the
//! geometric dual, and four-way edge partitions.

use crate::ribbon::{
    normalize_rotation, Dart, EdgeId, EdgePointRibbonGraph, Flag, FlagCtx, RibbonGraph, WalkData,
    SIDE_L, SIDE_R,
};
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpError {
    UnknownEdge(EdgeId),
    SingularEdge(EdgeId),
    AlreadySingular(EdgeId),
    Disconnected,
    HasSingularEdges,
    NotAPartition(String),
}

impl fmt::Display for OpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpError::UnknownEdge(e) => write!(f, "unknown edge {e}"),
            OpError::SingularEdge(e) => write!(f, "operation not defined on singular edge {e}"),
            OpError::AlreadySingular(e) => write!(f, "edge {e} is already singular"),
            OpError::Disconnected => write!(f, "operation requires a connected graph"),
            OpError::HasSingularEdges => write!(f, "operation requires an empty singular set"),
            OpError::NotAPartition(msg) => write!(f, "not a partition of the edge set: {msg}"),
        }
    }
}

impl std::error::Error for OpError {}

/// The four ways an ordered partition treats an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeOp {
    ContractToPoint,
    Contract,
    Delete,
    PenroseContract,
}

/// Pairwise-disjoint edge classes: A is contracted to a point, B contracted,
/// C deleted, D Penrose-contracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    pub a: BTreeSet<EdgeId>,
    pub b: BTreeSet<EdgeId>,
    pub c: BTreeSet<EdgeId>,
    pub d: BTreeSet<EdgeId>,
}

impl OrderedPartition {
    pub fn new(
        a: BTreeSet<EdgeId>,
        b: BTreeSet<EdgeId>,
        c: BTreeSet<EdgeId>,
        d: BTreeSet<EdgeId>,
    ) -> Result<OrderedPartition, OpError> {
        let classes = [&a, &b, &c, &d];
        let total: usize = classes.iter().map(|s| s.len()).sum();
        let union: BTreeSet<EdgeId> = classes.iter().flat_map(|s| s.iter().copied()).collect();
        if union.len() != total {
            return Err(OpError::NotAPartition("classes overlap".into()));
        }
        Ok(OrderedPartition { a, b, c, d })
    }

    pub fn classes(&self) -> [(&BTreeSet<EdgeId>, EdgeOp); 4] {
        [
            (&self.a, EdgeOp::ContractToPoint),
            (&self.b, EdgeOp::Contract),
            (&self.c, EdgeOp::Delete),
            (&self.d, EdgeOp::PenroseContract),
        ]
    }
}

impl EdgePointRibbonGraph {
    fn require_operable(&self, e: EdgeId) -> Result<(), OpError> {
        if !self.underlying.has_edge(e) {
            return Err(OpError::UnknownEdge(e));
        }
        if self.singular.contains(&e) {
            return Err(OpError::SingularEdge(e));
        }
        Ok(())
    }

    /// Removes the edge; its endpoints stay, possibly becoming isolated.
    pub fn delete(&self, e: EdgeId) -> Result<EdgePointRibbonGraph, OpError> {
        self.require_operable(e)?;
        let mut out = self.clone();
        for rot in out.underlying.vertices.values_mut() {
            if rot.iter().any(|d| d.edge() == e) {
                rot.retain(|d| d.edge() != e);
                normalize_rotation(rot);
            }
        }
        out.underlying.twisted.remove(&e);
        Ok(out)
    }

    /// Contracts the edge by attaching a disc to each boundary curve of the
    /// edge band together with its end vertices. A non-loop merges its two
    /// ends, an untwisted loop splits its vertex in two, a twisted loop keeps
    /// a single vertex.
    pub fn contract(&self, e: EdgeId) -> Result<EdgePointRibbonGraph, OpError> {
        self.require_operable(e)?;
        let g = &self.underlying;
        let da = Dart::new(e, 0);
        let db = Dart::new(e, 1);
        let vertex_of = g.vertex_of_darts();
        let u = vertex_of[&da];
        let v = vertex_of[&db];

        // rotation successor maps local to the end vertices
        let mut sigma: HashMap<Dart, Dart> = HashMap::new();
        let mut sigma_inv: HashMap<Dart, Dart> = HashMap::new();
        let mut local_darts: Vec<Dart> = Vec::new();
        let mut ends: Vec<_> = vec![u, v];
        ends.dedup();
        for vid in ends {
            let rot = &g.vertices[&vid];
            let n = rot.len();
            for i in 0..n {
                let next = rot[(i + 1) % n];
                sigma.insert(rot[i], next);
                sigma_inv.insert(next, rot[i]);
                local_darts.push(rot[i]);
            }
        }
        local_darts.sort();

        let twisted_e = g.is_twisted(e);
        let band_pair = |f: Flag| -> Flag {
            let side = if twisted_e { f.side() } else { f.side() ^ 1 };
            Flag::new(f.dart().partner(), side)
        };

        // walk the boundary of the sub-surface made of e and its endpoints;
        // free attachment arcs of the other darts are crossed and recorded
        let mut corners: Vec<Flag> = local_darts
            .iter()
            .flat_map(|d| [Flag::new(*d, SIDE_R), Flag::new(*d, SIDE_L)])
            .collect();
        corners.sort();
        let mut visited: HashSet<Flag> = HashSet::new();
        let mut circles: Vec<Vec<(Dart, bool)>> = Vec::new();
        for &start in &corners {
            if visited.contains(&start) {
                continue;
            }
            let mut records: Vec<(Dart, bool)> = Vec::new();
            let mut f = start;
            let mut ccw = true;
            loop {
                visited.insert(f);
                let on_band = f.dart() == da || f.dart() == db;
                match (f.side(), ccw) {
                    (SIDE_R, true) | (SIDE_L, false) if on_band => {
                        let nf = band_pair(f);
                        ccw = nf.side() == SIDE_L;
                        f = nf;
                    }
                    (SIDE_R, true) => {
                        records.push((f.dart(), false));
                        f = Flag::new(f.dart(), SIDE_L);
                    }
                    (SIDE_L, true) => {
                        f = Flag::new(sigma[&f.dart()], SIDE_R);
                    }
                    (SIDE_L, false) => {
                        records.push((f.dart(), true));
                        f = Flag::new(f.dart(), SIDE_R);
                    }
                    (_, false) => {
                        f = Flag::new(sigma_inv[&f.dart()], SIDE_L);
                    }
                    _ => unreachable!(),
                }
                if f == start && ccw {
                    break;
                }
            }
            circles.push(records);
        }

        let mut out = self.clone();
        out.underlying.vertices.remove(&u);
        out.underlying.vertices.remove(&v);
        out.underlying.twisted.remove(&e);
        for records in circles {
            let rotation: Vec<Dart> = records.iter().map(|(d, _)| *d).collect();
            out.underlying.insert_vertex(rotation);
            for (d, reversed) in records {
                if reversed {
                    let t = out.underlying.twisted.get_mut(&d.edge()).unwrap();
                    *t = !*t;
                }
            }
        }
        Ok(out)
    }

    /// Reattaches one end of the edge with a half twist; combinatorially this
    /// toggles the twist bit. Allowed on singular edges, where it changes the
    /// representation but not the edge-point ribbon graph.
    pub fn partial_petrial(&self, e: EdgeId) -> Result<EdgePointRibbonGraph, OpError> {
        if !self.underlying.has_edge(e) {
            return Err(OpError::UnknownEdge(e));
        }
        let mut out = self.clone();
        let t = out.underlying.twisted.get_mut(&e).unwrap();
        *t = !*t;
        Ok(out)
    }

    /// The partial Petrial over every edge.
    pub fn petrie_dual(&self) -> EdgePointRibbonGraph {
        let mut out = self.clone();
        for t in out.underlying.twisted.values_mut() {
            *t = !*t;
        }
        out
    }

    /// Penrose-contraction: partial Petrial followed by contraction.
    pub fn penrose_contract(&self, e: EdgeId) -> Result<EdgePointRibbonGraph, OpError> {
        self.require_operable(e)?;
        self.partial_petrial(e)?.contract(e)
    }

    /// Contracts the edge band to a single point, pinching the surface.
    pub fn contract_to_point(&self, e: EdgeId) -> Result<EdgePointRibbonGraph, OpError> {
        if !self.underlying.has_edge(e) {
            return Err(OpError::UnknownEdge(e));
        }
        if self.singular.contains(&e) {
            return Err(OpError::AlreadySingular(e));
        }
        let mut out = self.clone();
        out.singular.insert(e);
        Ok(out)
    }

    pub fn apply_edge_op(&self, e: EdgeId, op: EdgeOp) -> Result<EdgePointRibbonGraph, OpError> {
        match op {
            EdgeOp::ContractToPoint => self.contract_to_point(e),
            EdgeOp::Contract => self.contract(e),
            EdgeOp::Delete => self.delete(e),
            EdgeOp::PenroseContract => self.penrose_contract(e),
        }
    }

    /// Applies a four-way partition of the non-singular edges. Operations on
    /// distinct edges commute, so the application order does not matter.
    pub fn apply_partition(&self, p: &OrderedPartition) -> Result<EdgePointRibbonGraph, OpError> {
        let mut union = BTreeSet::new();
        for (class, _) in p.classes() {
            union.extend(class.iter().copied());
        }
        let expected: BTreeSet<EdgeId> = self.non_singular_edges().into_iter().collect();
        if union != expected {
            return Err(OpError::NotAPartition(
                "classes do not cover the non-singular edge set".into(),
            ));
        }
        let mut out = self.clone();
        for (class, op) in p.classes() {
            for e in class {
                out = out.apply_edge_op(*e, op)?;
            }
        }
        Ok(out)
    }

    /// View as a plain ribbon graph; fails when singular points are present.
    pub fn as_ribbon(&self) -> Result<&RibbonGraph, OpError> {
        if self.singular.is_empty() {
            Ok(&self.underlying)
        } else {
            Err(OpError::HasSingularEdges)
        }
    }

    pub fn geometric_dual(&self) -> Result<EdgePointRibbonGraph, OpError> {
        Ok(self.as_ribbon()?.geometric_dual().into())
    }
}

impl RibbonGraph {
    /// Caps each boundary component with a disc and deletes the original
    /// vertices. Dual vertices are the boundary walks; the edge set is kept,
    /// with each dual rotation following the side arcs along its walk.
    pub fn geometric_dual(&self) -> RibbonGraph {
        let ctx = FlagCtx::new(self);
        let wd = WalkData::trace(self);

        let mut dual = RibbonGraph::new();
        for e in self.edge_ids() {
            // a dual edge is untwisted exactly when crossing its band maps the
            // walk-entry flag of one side arc away from the entry of the other
            let entry1 = wd.arc_entry[&(e, 1)];
            let entry2 = wd.arc_entry[&(e, 2)];
            let twisted = ctx.tau_vertex(entry1) == entry2;
            dual.twisted.insert(e, twisted);
        }
        for arcs in &wd.walk_arcs {
            let rotation: Vec<Dart> = arcs
                .iter()
                .map(|(e, side)| Dart::new(*e, side - 1))
                .collect();
            dual.insert_vertex(rotation);
        }
        dual
    }
}
