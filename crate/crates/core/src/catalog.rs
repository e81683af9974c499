//! Named reference instances and seeded random instance generation.

use crate::ribbon::{Dart, EdgeId, EdgePointRibbonGraph, RibbonGraph};
use std::fmt;

/// Structural invariants asserted for a catalog instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantVector {
    pub components: usize,
    pub boundary: usize,
    pub euler_genus: usize,
    pub plane: bool,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: EdgePointRibbonGraph,
    pub expected: InvariantVector,
}

fn build(rotations: Vec<Vec<Dart>>, twisted: &[EdgeId]) -> EdgePointRibbonGraph {
    RibbonGraph::from_rotations(rotations, twisted)
        .expect("catalog instance must be valid")
        .into()
}

/// The reference instances: three isolated vertices, a single edge, both
/// loops, the plane theta graph, the plane digon, and two embeddings of K4.
pub fn named_instances() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "I3",
            graph: build(vec![vec![], vec![], vec![]], &[]),
            expected: InvariantVector {
                components: 3,
                boundary: 3,
                euler_genus: 0,
                plane: true,
            },
        },
        CatalogEntry {
            name: "E1",
            graph: build(vec![vec![Dart(0)], vec![Dart(1)]], &[]),
            expected: InvariantVector {
                components: 1,
                boundary: 1,
                euler_genus: 0,
                plane: true,
            },
        },
        CatalogEntry {
            name: "B1",
            graph: build(vec![vec![Dart(0), Dart(1)]], &[]),
            expected: InvariantVector {
                components: 1,
                boundary: 2,
                euler_genus: 0,
                plane: true,
            },
        },
        CatalogEntry {
            name: "B1T",
            graph: build(vec![vec![Dart(0), Dart(1)]], &[EdgeId(0)]),
            expected: InvariantVector {
                components: 1,
                boundary: 1,
                euler_genus: 1,
                plane: false,
            },
        },
        CatalogEntry {
            name: "THETA",
            graph: build(
                vec![
                    vec![Dart(0), Dart(2), Dart(4)],
                    vec![Dart(5), Dart(3), Dart(1)],
                ],
                &[],
            ),
            expected: InvariantVector {
                components: 1,
                boundary: 3,
                euler_genus: 0,
                plane: true,
            },
        },
        CatalogEntry {
            name: "DIGON",
            graph: build(vec![vec![Dart(0), Dart(2)], vec![Dart(3), Dart(1)]], &[]),
            expected: InvariantVector {
                components: 1,
                boundary: 2,
                euler_genus: 0,
                plane: true,
            },
        },
        // K4 drawn in the plane: outer triangle v1 v2 v3 with v4 inside.
        // Edges: e1=12, e2=13, e3=14, e4=23, e5=24, e6=34.
        CatalogEntry {
            name: "K4P",
            graph: build(
                vec![
                    vec![Dart(0), Dart(4), Dart(2)],
                    vec![Dart(1), Dart(6), Dart(8)],
                    vec![Dart(3), Dart(10), Dart(7)],
                    vec![Dart(11), Dart(5), Dart(9)],
                ],
                &[],
            ),
            expected: InvariantVector {
                components: 1,
                boundary: 4,
                euler_genus: 0,
                plane: true,
            },
        },
        // Same K4 with the rotation at v4 reversed; this embedding lives on the
        // torus.
        CatalogEntry {
            name: "K4NP",
            graph: build(
                vec![
                    vec![Dart(0), Dart(4), Dart(2)],
                    vec![Dart(1), Dart(6), Dart(8)],
                    vec![Dart(3), Dart(10), Dart(7)],
                    vec![Dart(11), Dart(9), Dart(5)],
                ],
                &[],
            ),
            expected: InvariantVector {
                components: 1,
                boundary: 2,
                euler_genus: 2,
                plane: false,
            },
        },
    ]
}

pub fn instance(name: &str) -> Option<EdgePointRibbonGraph> {
    let upper = name.to_ascii_uppercase();
    named_instances()
        .into_iter()
        .find(|e| e.name == upper)
        .map(|e| e.graph)
}

/// Euler genus summed over components: `2k - |V| + |E| - boundary`.
pub fn total_euler_genus(g: &RibbonGraph) -> usize {
    2 * g.component_count() + g.num_edges() - g.num_vertices() - g.boundary_walks().len()
}

pub const MAX_RANDOM_EDGES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    TooManyEdges { requested: usize, max: usize },
    NoVertices,
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::TooManyEdges { requested, max } => {
                write!(
                    f,
                    "requested {requested} edges, the generator accepts at most {max}"
                )
            }
            GenError::NoVertices => write!(f, "edges need at least one vertex"),
        }
    }
}

impl std::error::Error for GenError {}

pub(crate) struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Deterministic random instance: uniform-ish endpoints, rotation positions
/// and twist bits. Always valid; identical for identical seeds.
pub fn random_instance(
    n_vertices: usize,
    n_edges: usize,
    seed: u64,
) -> Result<EdgePointRibbonGraph, GenError> {
    if n_edges > MAX_RANDOM_EDGES {
        return Err(GenError::TooManyEdges {
            requested: n_edges,
            max: MAX_RANDOM_EDGES,
        });
    }
    if n_vertices == 0 && n_edges > 0 {
        return Err(GenError::NoVertices);
    }
    let mut rng = SplitMix64::new(seed);
    let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); n_vertices];
    let mut twisted = Vec::new();
    for i in 0..n_edges {
        let e = EdgeId(i as u32);
        for end in 0..2 {
            let v = rng.below(n_vertices as u64) as usize;
            let pos = rng.below(rotations[v].len() as u64 + 1) as usize;
            rotations[v].insert(pos, Dart::new(e, end));
        }
        if rng.next_u64() & 1 == 1 {
            twisted.push(e);
        }
    }
    Ok(RibbonGraph::from_rotations(rotations, &twisted)
        .expect("generated instance must be valid")
        .into())
}
