//! Exact computation of the five-variable polynomial Ω of edge-point ribbon
//! graphs, by two independent engines, together with a brute-force
//! k-valuation oracle on medial graphs and the classical specializations
//! (Penrose, transition, Tutte and chromatic identities).

pub mod catalog;
pub mod format;
pub mod medial;
pub mod omega;
pub mod ops;
pub mod poly;
pub mod ribbon;
pub mod special;

pub use ops::{EdgeOp, OpError, OrderedPartition};
pub use poly::{MultiPoly, Var};
pub use ribbon::{
    BoundaryWalk, Dart, EdgeId, EdgePointRibbonGraph, RibbonGraph, VertexId, WalkStep,
};
