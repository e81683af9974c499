//! The acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture` to
//! see the lines for passing criteria as well.

mod common;

use common::{random_suite, small_instances, TestRng};
use num_bigint::BigInt;
use omega_core::catalog::{self, named_instances};
use omega_core::medial::{count_k_valuations, omega_k_bruteforce, transition_poly_bruteforce};
use omega_core::omega::{
    omega, omega_k_polynomial, omega_recursive, omega_recursive_ordered, omega_state_sum, EdgeOrder,
};
use omega_core::poly::{MultiPoly, Var};
use omega_core::ribbon::EdgeId;
use omega_core::special::{
    edge_3_colouring_count, petrial_chromatic_sum, pointed_penrose, topological_penrose,
    tutte_poly, AbstractGraph,
};
use std::time::{Duration, Instant};

fn report(id: u32, label: &str, pass: bool, elapsed: Duration) {
    println!(
        "[acceptance] C{id:02} {} ({} ms) - {label}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_millis()
    );
    assert!(pass, "criterion C{id:02} failed: {label}");
}

fn within(elapsed: Duration, budget_secs: u64) -> bool {
    elapsed <= Duration::from_secs(budget_secs)
}

fn poly(pairs: &[(i64, [u16; 5])]) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (c, e) in pairs {
        out.add_term(*e, BigInt::from(*c));
    }
    out
}

fn eval_wxyz(p: &MultiPoly, w: i64, x: i64, y: i64, z: i64) -> MultiPoly {
    p.eval_i64(&[(Var::W, w), (Var::X, x), (Var::Y, y), (Var::Z, z)])
}

#[test]
fn c01_reference_example_values() {
    let start = Instant::now();
    let i3 = catalog::instance("I3").unwrap();
    let e1 = catalog::instance("E1").unwrap();
    let expect_i3 = poly(&[(1, [0, 0, 0, 0, 3])]);
    let expect_e1 = poly(&[
        (1, [1, 0, 0, 0, 1]),
        (1, [0, 1, 0, 0, 1]),
        (1, [0, 0, 0, 1, 1]),
        (1, [0, 0, 1, 0, 2]),
    ]);
    let pass = omega_recursive(&i3).polynomial == expect_i3
        && omega_state_sum(&i3).unwrap().polynomial == expect_i3
        && omega_recursive(&e1).polynomial == expect_e1
        && omega_state_sum(&e1).unwrap().polynomial == expect_e1
        && within(start.elapsed(), 1);
    report(
        1,
        "omega(I3) = t^3 and omega(E1) = (w+x+z)t + yt^2, both engines",
        pass,
        start.elapsed(),
    );
}

#[test]
fn c02_pinched_boundary_counts() {
    let start = Instant::now();
    let theta = catalog::instance("THETA").unwrap();
    let pinched = theta.contract_to_point(EdgeId(1)).unwrap();
    let pass = theta.pinched_boundary_count() == 3 && pinched.pinched_boundary_count() == 2;
    report(
        2,
        "boundary(THETA) = 3 and boundary(THETA pinched at e2) = 2",
        pass,
        start.elapsed(),
    );
}

#[test]
fn c03_engine_equivalence_and_order_independence() {
    let start = Instant::now();
    let mut instances: Vec<(String, _)> = named_instances()
        .into_iter()
        .map(|e| (e.name.to_string(), e.graph))
        .collect();
    instances.extend(random_suite());
    let mut pass = true;
    for (name, g) in &instances {
        let reference = omega_recursive(g).polynomial;
        if omega_state_sum(g).unwrap().polynomial != reference {
            eprintln!("engine mismatch on {name}");
            pass = false;
        }
        for seed in [11u64, 22, 33] {
            if omega_recursive_ordered(g, EdgeOrder::Seeded(seed)).polynomial != reference {
                eprintln!("order dependence on {name} seed {seed}");
                pass = false;
            }
        }
    }
    pass &= within(start.elapsed(), 10);
    report(
        3,
        "state sum = recursive on catalog + 50 randoms, stable over 3 edge orders, < 10 s",
        pass,
        start.elapsed(),
    );
}

const WEIGHT_TUPLES: [(i64, i64, i64, i64); 5] = [
    (1, 1, 1, 1),
    (2, 1, 1, 1),
    (1, 2, 3, 4),
    (-1, 2, -3, 1),
    (0, 1, -1, 2),
];

#[test]
fn c04_oracle_equivalence() {
    let start = Instant::now();
    let mut pass = true;
    for (name, g) in small_instances(4) {
        let pk = omega_k_polynomial(&g);
        for k in 1..=3u32 {
            for (w, x, y, z) in WEIGHT_TUPLES {
                let direct = omega_k_bruteforce(&g, k, w, x, y, z);
                let via_poly = pk.eval_all(w, x, y, z, k as i64);
                if direct != via_poly {
                    eprintln!("oracle mismatch on {name}: k={k} weights ({w},{x},{y},{z})");
                    pass = false;
                }
            }
        }
    }
    pass &= within(start.elapsed(), 60);
    report(
        4,
        "k-valuation brute force = omega_k polynomial at 5 weight tuples, k in 1..3, < 60 s",
        pass,
        start.elapsed(),
    );
}

#[test]
fn c05_valuation_count_identity() {
    let start = Instant::now();
    let mut pass = true;
    for (name, g) in small_instances(4) {
        let p = omega(&g);
        for k in 1..=3u32 {
            let via_omega = p.eval_all(-2, 1, 1, 1, k as i64);
            let direct = count_k_valuations(&g, k);
            if via_omega != direct {
                eprintln!("count mismatch on {name} at k={k}: {via_omega} vs {direct}");
                pass = false;
            }
        }
    }
    report(
        5,
        "omega(H; -2,1,1,1,k) counts the k-valuations for k in 1..3",
        pass,
        start.elapsed(),
    );
}

#[test]
fn c06_chromatic_sum_identities() {
    let start = Instant::now();
    let mut pass = true;
    for (name, g) in small_instances(4) {
        if !g.is_ribbon() {
            continue;
        }
        let rg = g.as_ribbon().unwrap();
        let p = omega(&g);
        let unsigned = petrial_chromatic_sum(rg, false);
        let signed = petrial_chromatic_sum(rg, true);
        if unsigned != eval_wxyz(&p, -2, 1, 0, 1) {
            eprintln!("unsigned chromatic sum mismatch on {name}");
            pass = false;
        }
        if signed != eval_wxyz(&p, 0, 1, 0, -1) {
            eprintln!("signed chromatic sum mismatch on {name}");
            pass = false;
        }
    }
    pass &= within(start.elapsed(), 30);
    report(
        6,
        "chromatic sums over partial Petrials of the dual match both omega specializations, < 30 s",
        pass,
        start.elapsed(),
    );
}

#[test]
fn c07_plane_penrose_agreement() {
    let start = Instant::now();
    let mut pass = true;
    for entry in named_instances() {
        if !entry.expected.plane {
            continue;
        }
        let p = omega(&entry.graph);
        if eval_wxyz(&p, -2, 1, 0, 1) != eval_wxyz(&p, 0, 1, 0, -1) {
            eprintln!(
                "plane instance {} separates the two Penrose forms",
                entry.name
            );
            pass = false;
        }
    }
    let b1t = catalog::instance("B1T").unwrap();
    let pointed = pointed_penrose(&b1t);
    let topological = topological_penrose(b1t.as_ribbon().unwrap());
    let expect_pointed = poly(&[(1, [0, 0, 0, 0, 2]), (-1, [0, 0, 0, 0, 1])]);
    let expect_topological = poly(&[(-1, [0, 0, 0, 0, 2]), (1, [0, 0, 0, 0, 1])]);
    pass &= pointed == expect_pointed && topological == expect_topological;
    report(
        7,
        "pointed = topological Penrose on plane instances; they differ on B1T",
        pass,
        start.elapsed(),
    );
}

#[test]
fn c08_edge_three_colourings() {
    let start = Instant::now();
    let mut pass = true;
    let mut values = Vec::new();
    for name in ["THETA", "K4P", "K4NP"] {
        let g = catalog::instance(name).unwrap();
        let count = edge_3_colouring_count(&AbstractGraph::from_ribbon(&g.underlying));
        let via_penrose = pointed_penrose(&g).eval_all(0, 0, 0, 0, 3);
        if via_penrose != BigInt::from(count) || count != 6 {
            eprintln!("edge colouring mismatch on {name}: penrose {via_penrose}, count {count}");
            pass = false;
        }
        values.push(via_penrose);
    }
    // the two K4 embeddings agree: the count is independent of the embedding
    pass &= values[1] == values[2];
    report(
        8,
        "pointed Penrose at 3 counts the 6 edge 3-colourings of THETA and both K4 embeddings",
        pass,
        start.elapsed(),
    );
}

#[test]
fn c09_transition_polynomial() {
    let start = Instant::now();
    let mut rng = TestRng::new(0x7a31);
    let mut pass = true;
    for (name, g) in small_instances(4) {
        if !g.is_ribbon() {
            continue;
        }
        let p = omega(&g);
        for _ in 0..10 {
            let (a, b, c, t) = (
                rng.int_in(-3, 3),
                rng.int_in(-3, 3),
                rng.int_in(-3, 3),
                rng.int_in(-3, 3),
            );
            let lhs = eval_wxyz(&p, 0, a, b, c).eval_all(0, 0, 0, 0, t);
            let rhs = transition_poly_bruteforce(g.as_ribbon().unwrap(), a, b, c, t);
            if lhs != rhs {
                eprintln!("transition mismatch on {name} at ({a},{b},{c};{t})");
                pass = false;
            }
        }
    }
    report(
        9,
        "omega(G; 0,a,b,c,t) equals the medial smoothing sum at 10 random tuples per instance",
        pass,
        start.elapsed(),
    );
}

#[test]
fn c10_tutte_spot_check() {
    let start = Instant::now();
    let mut pass = true;
    for name in ["E1", "THETA", "K4P", "DIGON"] {
        let g = catalog::instance(name).unwrap();
        let lhs = omega(&g).eval_all(0, 2, 1, 0, 2);
        let tutte = tutte_poly(&AbstractGraph::from_ribbon(&g.underlying));
        let t_value = tutte
            .eval_i64(&[(Var::X, 2), (Var::Y, 5)])
            .eval_all(0, 0, 0, 0, 0);
        let rhs = BigInt::from(2).pow(g.num_vertices() as u32) * t_value;
        if lhs != rhs {
            eprintln!("Tutte spot check mismatch on {name}: {lhs} vs {rhs}");
            pass = false;
        }
    }
    report(
        10,
        "omega(G; 0,2,1,0,2) = 2^V * T(G; 2,5) on the plane instances",
        pass,
        start.elapsed(),
    );
}

#[test]
fn c11_structural_properties() {
    let start = Instant::now();
    let mut pass = true;
    let suite = random_suite();

    // homogeneity of degree |E| in w,x,y,z
    for (name, g) in &suite {
        let p = omega(g);
        let m = g.non_singular_edges().len() as u16;
        for (exps, _) in p.terms() {
            if exps[0] + exps[1] + exps[2] + exps[3] != m {
                eprintln!("homogeneity violated on {name}");
                pass = false;
            }
        }
    }

    // multiplicativity over disjoint unions
    for i in [0usize, 5, 11] {
        let (na, a) = &suite[i];
        let (nb, b) = &suite[i + 2];
        if a.num_edges() + b.num_edges() > 7 {
            continue;
        }
        if omega(&a.disjoint_union(b)) != &omega(a) * &omega(b) {
            eprintln!("multiplicativity violated on {na} + {nb}");
            pass = false;
        }
    }

    // each extra isolated vertex multiplies every oracle count by k
    let one_vertex = catalog::random_instance(1, 0, 9).unwrap();
    for (name, g) in suite.iter().take(12) {
        if g.num_edges() > 3 {
            continue;
        }
        let bigger = g.disjoint_union(&one_vertex);
        for k in 1..=3u32 {
            if count_k_valuations(&bigger, k) != count_k_valuations(g, k) * k {
                eprintln!("free-loop factor violated on {name} at k={k}");
                pass = false;
            }
        }
    }

    // the partial Petrial is an involution on representations
    for (name, g) in &suite {
        for e in g.non_singular_edges() {
            let twice = g.partial_petrial(e).unwrap().partial_petrial(e).unwrap();
            if &twice != g {
                eprintln!("petrial involution violated on {name} at {e}");
                pass = false;
            }
        }
    }

    // operations on distinct edges commute
    let ops = [
        omega_core::EdgeOp::Delete,
        omega_core::EdgeOp::Contract,
        omega_core::EdgeOp::PenroseContract,
        omega_core::EdgeOp::ContractToPoint,
    ];
    let mut rng = TestRng::new(0xbead);
    for (name, g) in &suite {
        let edges = g.non_singular_edges();
        if edges.len() < 2 {
            continue;
        }
        let e = edges[rng.below(edges.len() as u64) as usize];
        let mut f = edges[rng.below(edges.len() as u64) as usize];
        if e == f {
            f = *edges.iter().find(|x| **x != e).unwrap();
        }
        let p = ops[rng.below(4) as usize];
        let q = ops[rng.below(4) as usize];
        let ef = g.apply_edge_op(e, p).unwrap().apply_edge_op(f, q).unwrap();
        let fe = g.apply_edge_op(f, q).unwrap().apply_edge_op(e, p).unwrap();
        let vec_of = |h: &omega_core::EdgePointRibbonGraph| {
            (
                h.component_count(),
                h.pinched_boundary_count(),
                h.num_vertices(),
                h.num_edges(),
                h.singular.clone(),
            )
        };
        if vec_of(&ef) != vec_of(&fe) || omega(&ef) != omega(&fe) {
            eprintln!("commutation violated on {name}: {p:?}@{e} vs {q:?}@{f}");
            pass = false;
        }
    }

    report(
        11,
        "homogeneity, multiplicativity, free-loop factor, petrial involution, commutation",
        pass,
        start.elapsed(),
    );
}
