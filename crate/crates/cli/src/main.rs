//! Command-line interface: compute Ω and its specializations, inspect medial
//! structure, manage the instance catalog, and run the verification suites.
//!
//! Exit codes: 0 on success (all checks pass), 1 when a verification fails,
//! 2 on input errors.

use clap::{Parser, Subcommand, ValueEnum};
use omega_core::catalog::{self, named_instances, total_euler_genus};
use omega_core::format::{parse_document, serialize_document, to_document, ParsedGraph};
use omega_core::medial::{
    count_k_valuations, omega_k_bruteforce, transition_poly_bruteforce, MedialGraph,
};
use omega_core::omega::{
    omega, omega_k_polynomial, omega_recursive, omega_recursive_ordered, omega_state_sum_limited,
    EdgeOrder, Method, OmegaResult,
};
use omega_core::poly::Var;
use omega_core::special::{
    edge_3_colouring_count, petrial_chromatic_sum, pointed_penrose, topological_penrose,
    tutte_poly, AbstractGraph,
};
use omega_core::{EdgeId, EdgePointRibbonGraph};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "omega",
    about = "Exact Ω-polynomial computations on ribbon graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Statesum,
    Recursive,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpecialPoly {
    PointedPenrose,
    Penrose,
    Transition,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Engines,
    Oracle,
    Corollaries,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Ω of a graph document and print it canonically.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "recursive")]
        method: MethodArg,
        /// State-sum refusal threshold on the number of non-singular edges.
        #[arg(long, default_value_t = 14)]
        max_edges: usize,
        /// Print evaluation statistics to stderr.
        #[arg(long)]
        stats: bool,
        /// Emit the polynomial as JSON term records instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Compute the k-valuation polynomial Ω_k (t plays the role of k).
    OmegaK {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate Ω at an integer assignment, e.g. --at w=-2,x=1,y=1,z=1,t=3.
    Eval {
        file: PathBuf,
        #[arg(long)]
        at: String,
    },
    /// Compute a named specialization.
    Special {
        file: PathBuf,
        #[arg(long, value_enum)]
        poly: SpecialPoly,
        #[arg(long, default_value_t = 1)]
        alpha: i64,
        #[arg(long, default_value_t = 1)]
        beta: i64,
        #[arg(long, default_value_t = 1)]
        gamma: i64,
        #[arg(long = "t", default_value_t = 1)]
        t_value: i64,
    },
    /// Emit the medial graph structure as JSON.
    Medial { file: PathBuf },
    /// Run the identity suites on a file or on the whole catalog.
    Verify {
        file: Option<PathBuf>,
        #[arg(long)]
        catalog: bool,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 14)]
        max_edges: usize,
        /// Skip oracle enumeration beyond this edge count.
        #[arg(long, default_value_t = 6)]
        oracle_max_edges: usize,
        /// Largest k for the oracle suite.
        #[arg(long, default_value_t = 3)]
        max_k: u32,
    },
    /// List the named instances, or write them out as JSON documents.
    Catalog {
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Generate a seeded random instance document on stdout.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn fail_input(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load(path: &Path) -> Result<ParsedGraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_document(&text).map_err(|e| e.to_string())
}

fn print_poly(p: &omega_core::MultiPoly, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(&p.json_terms()).expect("polynomial serialization")
        );
    } else {
        println!("{p}");
    }
}

fn parse_assignment(spec: &str) -> Result<Vec<(Var, i64)>, String> {
    let mut out = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected var=int, got '{part}'"))?;
        let var = name
            .trim()
            .chars()
            .next()
            .filter(|_| name.trim().len() == 1)
            .and_then(Var::from_symbol)
            .ok_or_else(|| format!("unknown variable '{name}'"))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| format!("not an integer: '{value}'"))?;
        out.push((var, value));
    }
    Ok(out)
}

#[derive(Serialize)]
struct MedialVertexOut {
    edge: String,
    singular: bool,
}

#[derive(Serialize)]
struct MedialEdgeOut {
    id: usize,
    vertex: String,
    corner: [String; 2],
    endpoints: [(String, usize); 2],
}

#[derive(Serialize)]
struct MedialOut {
    vertices: Vec<MedialVertexOut>,
    medial_edges: Vec<MedialEdgeOut>,
    free_loops: Vec<String>,
}

fn medial_json(parsed: &ParsedGraph) -> String {
    let m = MedialGraph::build(&parsed.graph);
    let edge_name = |e: EdgeId| -> String {
        parsed
            .edge_names
            .get(&e)
            .cloned()
            .unwrap_or_else(|| e.to_string())
    };
    let out = MedialOut {
        vertices: m
            .vertex_edge_ids()
            .iter()
            .map(|e| MedialVertexOut {
                edge: edge_name(*e),
                singular: m.is_singular_vertex(*e),
            })
            .collect(),
        medial_edges: m
            .medial_edges()
            .iter()
            .map(|me| MedialEdgeOut {
                id: me.id,
                vertex: me.corner.0.to_string(),
                corner: [me.corner.1.to_string(), me.corner.2.to_string()],
                endpoints: [
                    (edge_name(me.endpoints[0].0), me.endpoints[0].1),
                    (edge_name(me.endpoints[1].0), me.endpoints[1].1),
                ],
            })
            .collect(),
        free_loops: m.free_loops().iter().map(|v| v.to_string()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&out).expect("medial serialization");
    s.push('\n');
    s
}

struct VerifyReport {
    checks: u64,
    failures: u64,
}

impl VerifyReport {
    fn new() -> Self {
        VerifyReport {
            checks: 0,
            failures: 0,
        }
    }

    fn record(&mut self, instance: &str, check: &str, pass: bool) {
        self.checks += 1;
        if pass {
            println!("ok   - {instance}: {check}");
        } else {
            self.failures += 1;
            println!("FAIL - {instance}: {check}");
        }
    }
}

struct VerifyTarget {
    name: String,
    graph: EdgePointRibbonGraph,
    plane: Option<bool>,
}

const WEIGHT_TUPLES: [(i64, i64, i64, i64); 5] = [
    (1, 1, 1, 1),
    (2, 1, 1, 1),
    (1, 2, 3, 4),
    (-1, 2, -3, 1),
    (0, 1, -1, 2),
];

fn verify_engines(t: &VerifyTarget, max_edges: usize, report: &mut VerifyReport) {
    let reference = omega_recursive(&t.graph).polynomial;
    match omega_state_sum_limited(&t.graph, max_edges) {
        Ok(sum) => report.record(
            &t.name,
            "state sum = recursive",
            sum.polynomial == reference,
        ),
        Err(e) => report.record(&t.name, &format!("state sum skipped ({e})"), true),
    }
    let mut stable = true;
    for seed in [11u64, 22, 33] {
        stable &=
            omega_recursive_ordered(&t.graph, EdgeOrder::Seeded(seed)).polynomial == reference;
    }
    report.record(&t.name, "recursion stable over 3 edge orders", stable);
}

fn verify_oracle(t: &VerifyTarget, oracle_max_edges: usize, max_k: u32, report: &mut VerifyReport) {
    if t.graph.num_edges() > oracle_max_edges {
        report.record(
            &t.name,
            &format!("oracle skipped (over {oracle_max_edges} edges)"),
            true,
        );
        return;
    }
    let pk = omega_k_polynomial(&t.graph);
    let p = omega(&t.graph);
    let mut weighted = true;
    let mut counts = true;
    for k in 1..=max_k {
        for (w, x, y, z) in WEIGHT_TUPLES {
            weighted &=
                omega_k_bruteforce(&t.graph, k, w, x, y, z) == pk.eval_all(w, x, y, z, k as i64);
        }
        counts &= count_k_valuations(&t.graph, k) == p.eval_all(-2, 1, 1, 1, k as i64);
    }
    report.record(
        &t.name,
        "weighted k-valuation counts match omega_k",
        weighted,
    );
    report.record(
        &t.name,
        "total k-valuation count matches omega(-2,1,1,1,k)",
        counts,
    );
}

fn verify_corollaries(t: &VerifyTarget, report: &mut VerifyReport) {
    let p = omega(&t.graph);
    let eval = |w: i64, x: i64, y: i64, z: i64| {
        p.eval_i64(&[(Var::W, w), (Var::X, x), (Var::Y, y), (Var::Z, z)])
    };
    if let Ok(rg) = t.graph.as_ribbon() {
        if t.graph.num_edges() <= 4 {
            report.record(
                &t.name,
                "chromatic sum over petrials = pointed Penrose",
                petrial_chromatic_sum(rg, false) == eval(-2, 1, 0, 1),
            );
            report.record(
                &t.name,
                "signed chromatic sum = topological Penrose",
                petrial_chromatic_sum(rg, true) == eval(0, 1, 0, -1),
            );
        }
        let mut transition = true;
        for (a, b, c, tv) in [(1i64, 1, 1, 2), (2, -1, 3, 1), (1, 2, 3, -2)] {
            transition &= eval(0, a, b, c).eval_all(0, 0, 0, 0, tv)
                == transition_poly_bruteforce(rg, a, b, c, tv);
        }
        report.record(&t.name, "transition polynomial specialization", transition);

        let abstract_graph = AbstractGraph::from_ribbon(rg);
        if abstract_graph.is_cubic() {
            let count = edge_3_colouring_count(&abstract_graph);
            report.record(
                &t.name,
                "pointed Penrose at 3 counts edge 3-colourings",
                pointed_penrose(&t.graph).eval_all(0, 0, 0, 0, 3) == count.into(),
            );
        }
        if t.plane == Some(true) {
            report.record(
                &t.name,
                "plane: pointed = topological Penrose",
                eval(-2, 1, 0, 1) == eval(0, 1, 0, -1),
            );
            let tutte = tutte_poly(&abstract_graph);
            let t_value = tutte
                .eval_i64(&[(Var::X, 2), (Var::Y, 5)])
                .eval_all(0, 0, 0, 0, 0);
            let rhs = num_bigint::BigInt::from(2).pow(t.graph.num_vertices() as u32) * t_value;
            report.record(
                &t.name,
                "plane: omega(0,2,1,0,2) = 2^V * T(2,5)",
                p.eval_all(0, 2, 1, 0, 2) == rhs,
            );
        }
    }
}

fn run_verify(
    targets: Vec<VerifyTarget>,
    suite: Suite,
    max_edges: usize,
    oracle_max_edges: usize,
    max_k: u32,
) -> ExitCode {
    let mut report = VerifyReport::new();
    for t in &targets {
        match suite {
            Suite::Engines => verify_engines(t, max_edges, &mut report),
            Suite::Oracle => verify_oracle(t, oracle_max_edges, max_k, &mut report),
            Suite::Corollaries => verify_corollaries(t, &mut report),
            Suite::All => {
                verify_engines(t, max_edges, &mut report);
                verify_oracle(t, oracle_max_edges, max_k, &mut report);
                verify_corollaries(t, &mut report);
            }
        }
    }
    println!("{} checks, {} failures", report.checks, report.failures);
    if report.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute {
            file,
            method,
            max_edges,
            stats,
            json,
        } => {
            let parsed = match load(&file) {
                Ok(p) => p,
                Err(e) => return fail_input(e),
            };
            let result: OmegaResult = match method {
                MethodArg::Recursive => omega_recursive(&parsed.graph),
                MethodArg::Statesum => match omega_state_sum_limited(&parsed.graph, max_edges) {
                    Ok(r) => r,
                    Err(e) => return fail_input(e),
                },
            };
            if stats {
                let method = match result.method {
                    Method::StateSum => "statesum",
                    Method::Recursive => "recursive",
                };
                eprintln!(
                    "method {method}: {} evaluations, {} cache hits",
                    result.stats.evaluated, result.stats.cache_hits
                );
            }
            print_poly(&result.polynomial, json);
            ExitCode::SUCCESS
        }
        Command::OmegaK { file, json } => match load(&file) {
            Ok(parsed) => {
                print_poly(&omega_k_polynomial(&parsed.graph), json);
                ExitCode::SUCCESS
            }
            Err(e) => fail_input(e),
        },
        Command::Eval { file, at } => {
            let parsed = match load(&file) {
                Ok(p) => p,
                Err(e) => return fail_input(e),
            };
            let assignment = match parse_assignment(&at) {
                Ok(a) => a,
                Err(e) => return fail_input(e),
            };
            println!("{}", omega(&parsed.graph).eval_i64(&assignment));
            ExitCode::SUCCESS
        }
        Command::Special {
            file,
            poly,
            alpha,
            beta,
            gamma,
            t_value,
        } => {
            let parsed = match load(&file) {
                Ok(p) => p,
                Err(e) => return fail_input(e),
            };
            match poly {
                SpecialPoly::PointedPenrose => {
                    println!("{}", pointed_penrose(&parsed.graph));
                    ExitCode::SUCCESS
                }
                SpecialPoly::Penrose => match parsed.graph.as_ribbon() {
                    Ok(rg) => {
                        println!("{}", topological_penrose(rg));
                        ExitCode::SUCCESS
                    }
                    Err(e) => fail_input(e),
                },
                SpecialPoly::Transition => match parsed.graph.as_ribbon() {
                    Ok(rg) => {
                        println!(
                            "{}",
                            transition_poly_bruteforce(rg, alpha, beta, gamma, t_value)
                        );
                        ExitCode::SUCCESS
                    }
                    Err(e) => fail_input(e),
                },
            }
        }
        Command::Medial { file } => match load(&file) {
            Ok(parsed) => {
                print!("{}", medial_json(&parsed));
                ExitCode::SUCCESS
            }
            Err(e) => fail_input(e),
        },
        Command::Verify {
            file,
            catalog: use_catalog,
            suite,
            max_edges,
            oracle_max_edges,
            max_k,
        } => {
            let mut targets = Vec::new();
            if use_catalog || file.is_none() {
                for entry in named_instances() {
                    targets.push(VerifyTarget {
                        name: entry.name.to_string(),
                        graph: entry.graph.clone(),
                        plane: Some(entry.expected.plane),
                    });
                    // one pinched variant per instance with an edge
                    if let Some(e) = entry.graph.non_singular_edges().first().copied() {
                        targets.push(VerifyTarget {
                            name: format!("{}-pinched", entry.name),
                            graph: entry.graph.contract_to_point(e).unwrap(),
                            plane: None,
                        });
                    }
                }
            }
            if let Some(path) = file {
                match load(&path) {
                    Ok(parsed) => targets.push(VerifyTarget {
                        name: parsed
                            .name
                            .clone()
                            .unwrap_or_else(|| path.display().to_string()),
                        plane: parsed.plane,
                        graph: parsed.graph,
                    }),
                    Err(e) => return fail_input(e),
                }
            }
            run_verify(targets, suite, max_edges, oracle_max_edges, max_k)
        }
        Command::Catalog { emit } => {
            for entry in named_instances() {
                let g = &entry.graph;
                println!(
                    "{:6} vertices {} edges {} components {} boundary {} genus {} plane {}",
                    entry.name,
                    g.num_vertices(),
                    g.num_edges(),
                    g.component_count(),
                    g.pinched_boundary_count(),
                    total_euler_genus(&g.underlying),
                    entry.expected.plane
                );
            }
            if let Some(dir) = emit {
                if let Err(e) = std::fs::create_dir_all(&dir) {
                    return fail_input(format!("cannot create {}: {e}", dir.display()));
                }
                for entry in named_instances() {
                    let doc = to_document(
                        &entry.graph,
                        None,
                        Some(entry.name),
                        Some(entry.expected.plane),
                    );
                    let path = dir.join(format!("{}.json", entry.name.to_lowercase()));
                    if let Err(e) = std::fs::write(&path, serialize_document(&doc)) {
                        return fail_input(format!("cannot write {}: {e}", path.display()));
                    }
                    println!("wrote {}", path.display());
                }
            }
            ExitCode::SUCCESS
        }
        Command::Random {
            vertices,
            edges,
            seed,
        } => match catalog::random_instance(vertices, edges, seed) {
            Ok(g) => {
                let doc = to_document(&g, None, Some(&format!("random-{seed}")), None);
                print!("{}", serialize_document(&doc));
                ExitCode::SUCCESS
            }
            Err(e) => fail_input(e),
        },
    }
}
