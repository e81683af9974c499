#![allow(dead_code)]

use omega_core::catalog::{self, random_instance};
use omega_core::ribbon::EdgePointRibbonGraph;

/// Deterministic xorshift for test-local choices.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> TestRng {
        TestRng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// Fifty seeded instances with at most five edges.
pub fn random_suite() -> Vec<(String, EdgePointRibbonGraph)> {
    (0..50u64)
        .map(|seed| {
            let n_v = 1 + (seed as usize % 4);
            let n_e = seed as usize % 6;
            (
                format!("random-{seed}"),
                random_instance(n_v, n_e, seed).unwrap(),
            )
        })
        .collect()
}

/// Catalog entries, seeded randoms and one pinched variant per catalog
/// instance, filtered to at most `max_edges` edges.
pub fn small_instances(max_edges: usize) -> Vec<(String, EdgePointRibbonGraph)> {
    let mut out: Vec<(String, EdgePointRibbonGraph)> = Vec::new();
    for entry in catalog::named_instances() {
        if entry.graph.num_edges() <= max_edges {
            out.push((entry.name.to_string(), entry.graph.clone()));
        }
        if let Some(e) = entry.graph.non_singular_edges().first().copied() {
            let pinched = entry.graph.contract_to_point(e).unwrap();
            if pinched.num_edges() <= max_edges {
                out.push((format!("{}-pinched", entry.name), pinched));
            }
        }
    }
    for (name, g) in random_suite() {
        if g.num_edges() <= max_edges {
            out.push((name, g));
        }
    }
    out
}
