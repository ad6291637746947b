//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the run
//! fails if any criterion fails.
//!
//! Run with `cargo test -p avghered-cli --test acceptance`.

use std::panic;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use avghered_core::bounds::{bound_avg, bound_delta, bound_soto, exact_case};
use avghered_core::coloring::{degeneracy_coloring, exact_chromatic, validate_coloring};
use avghered_core::density::{densest_subgraph, is_average_hereditary, mad, mad_bruteforce};
use avghered_core::generators::{clique_plus_path, gnp, random_3cnf, random_regular, random_tree};
use avghered_core::reduction::{karp_graph, predicted_stats, sat_bruteforce, CnfFormula, Literal};
use avghered_core::{Fraction, Graph};

type Criterion = (&'static str, fn() -> Result<String, String>);

const P_VALUES: [f64; 3] = [0.2, 0.5, 0.8];
const EXACT_LIMIT: usize = 31;

/// The 500 seeded G(n, p) graphs with n <= 12.
fn gnp_corpus() -> Vec<Graph> {
    (0..500u64)
        .map(|i| {
            let n = 1 + (i % 12) as usize;
            let p = P_VALUES[(i / 12 % 3) as usize];
            gnp(n, p, 1000 + i).unwrap()
        })
        .collect()
}

/// Every corpus graph with n <= 12: the G(n, p) sample plus named graphs,
/// trees, regular graphs and clique-plus-path graphs.
fn small_corpus() -> Vec<Graph> {
    let mut out = gnp_corpus();
    for n in 1..=8 {
        out.push(Graph::complete(n));
    }
    for n in 3..=12 {
        out.push(Graph::cycle(n).unwrap());
    }
    for n in 1..=12 {
        out.push(Graph::path(n));
        out.push(Graph::empty(n));
        out.push(random_tree(n, n as u64).unwrap());
    }
    for leaves in 1..=11 {
        out.push(Graph::star(leaves));
    }
    out.push(Graph::petersen());
    out.push(Graph::complete(7).disjoint_union(&Graph::complete(3)));
    for (n, k) in [
        (6, 3),
        (8, 3),
        (10, 3),
        (12, 3),
        (7, 4),
        (9, 4),
        (12, 5),
        (10, 4),
    ] {
        for seed in 0..3 {
            out.push(random_regular(n, k, seed).unwrap());
        }
    }
    for a in 3..=8 {
        for b in 1..=(12 - a) {
            out.push(clique_plus_path(a, b).unwrap());
        }
    }
    assert!(out.iter().all(|g| g.n() <= 12));
    out
}

fn karp_formulas(count: u64, max_vars: usize, max_clauses: usize, seed0: u64) -> Vec<CnfFormula> {
    (0..count)
        .map(|i| {
            let vars = 1 + (i as usize % max_vars);
            let min_clauses = vars.div_ceil(3);
            let clauses = min_clauses + (i as usize / max_vars) % (max_clauses - min_clauses + 1);
            random_3cnf(vars, clauses, seed0 + i).unwrap()
        })
        .collect()
}

/// Larger graphs, up to 10^4 vertices, checked with greedy coloring only.
fn large_corpus() -> Vec<Graph> {
    let mut out = vec![
        random_tree(10_000, 1).unwrap(),
        random_regular(10_000, 3, 2).unwrap(),
        random_regular(10_000, 4, 3).unwrap(),
        gnp(10_000, 0.001, 4).unwrap(),
        gnp(2_000, 0.01, 5).unwrap(),
        gnp(500, 0.1, 6).unwrap(),
        gnp(200, 0.5, 7).unwrap(),
        clique_plus_path(5, 100).unwrap(),
        clique_plus_path(30, 2_000).unwrap(),
    ];
    for f in karp_formulas(50, 6, 8, 77) {
        out.push(karp_graph(&f).unwrap().graph);
    }
    out
}

fn all_corpus() -> Vec<Graph> {
    let mut v = small_corpus();
    v.extend(large_corpus());
    v
}

fn recomputed_density(g: &Graph, s: &[usize]) -> Fraction {
    Fraction::new(g.edges_within(s).unwrap() as i64, s.len() as i64)
}

fn c1_mad_oracle() -> Result<String, String> {
    let start = Instant::now();
    let corpus = gnp_corpus();
    for (i, g) in corpus.iter().enumerate() {
        let flow = densest_subgraph(g).unwrap();
        let brute = mad_bruteforce(g).unwrap();
        if flow.mad != brute.mad {
            return Err(format!(
                "graph {i}: flow {} vs brute force {}",
                flow.mad, brute.mad
            ));
        }
        for r in [&flow, &brute] {
            if recomputed_density(g, &r.subgraph_vertices) * 2 != r.mad {
                return Err(format!(
                    "graph {i}: returned subset does not achieve {}",
                    r.mad
                ));
            }
        }
    }
    within(start, 30, format!("{} graphs, 0 mismatches", corpus.len()))
}

fn c2_class_membership() -> Result<String, String> {
    let start = Instant::now();
    for i in 0..100u64 {
        let n = 1 + (i as usize * 37) % 200;
        let g = random_tree(n, i).unwrap();
        if !is_average_hereditary(&g).unwrap().is_ah {
            return Err(format!("tree n={n} seed={i} reported non-AH"));
        }
    }
    for i in 0..100u64 {
        let k = 2 + (i % 3) as usize;
        let mut n = k + 1 + (i as usize * 13) % (100 - k);
        if n * k % 2 == 1 {
            n += 1;
        }
        let g = random_regular(n, k, i).unwrap();
        if !is_average_hereditary(&g).unwrap().is_ah {
            return Err(format!("{k}-regular n={n} seed={i} reported non-AH"));
        }
    }
    for i in 0..50usize {
        let (a, b) = (4 + i % 7, 1 + (i * 17) % 100);
        let g = clique_plus_path(a, b).unwrap();
        let verdict = is_average_hereditary(&g).unwrap();
        let Some(w) = verdict.witness.filter(|_| !verdict.is_ah) else {
            return Err(format!("clique-path a={a} b={b} reported AH"));
        };
        let (h, _) = g.induced_subgraph(&w.subgraph_vertices).unwrap();
        if h.average_degree() <= g.average_degree() {
            return Err(format!("clique-path a={a} b={b}: witness is not denser"));
        }
    }
    within(
        start,
        60,
        "100 trees, 100 regular AH; 50 clique-paths non-AH with witnesses".into(),
    )
}

fn c3_mad_bound() -> Result<String, String> {
    let small = small_corpus();
    for (i, g) in small.iter().enumerate() {
        let bound = mad(g).unwrap().floor() as usize + 1;
        let chi = exact_chromatic(g, EXACT_LIMIT).unwrap();
        if chi > bound {
            return Err(format!("small graph {i}: χ = {chi} > {bound}"));
        }
    }
    let corpus = all_corpus();
    let mut largest = 0;
    for (i, g) in corpus.iter().enumerate() {
        let bound = mad(g).unwrap().floor() as usize + 1;
        let (order, coloring) = degeneracy_coloring(g).unwrap();
        if !validate_coloring(g, &coloring).unwrap() {
            return Err(format!("graph {i}: greedy coloring is not proper"));
        }
        if coloring.num_colors > bound || order.degeneracy + 1 > bound {
            return Err(format!(
                "graph {i}: greedy {} / degeneracy+1 {} > {bound}",
                coloring.num_colors,
                order.degeneracy + 1
            ));
        }
        largest = largest.max(g.n());
    }
    Ok(format!(
        "{} exact checks, {} greedy checks up to n = {largest}, 0 violations",
        small.len(),
        corpus.len()
    ))
}

fn c4_bound_domination() -> Result<String, String> {
    let corpus = all_corpus();
    let mut connected = 0;
    for (i, g) in corpus.iter().enumerate() {
        let bound = mad(g).unwrap().floor() as usize + 1;
        let delta = bound_delta(g).unwrap();
        if bound > delta {
            return Err(format!("graph {i}: ⌊MAD+1⌋ = {bound} > Δ+1 = {delta}"));
        }
        if let Some(soto) = bound_soto(g) {
            connected += 1;
            if bound > soto {
                return Err(format!("graph {i}: ⌊MAD+1⌋ = {bound} > Soto {soto}"));
            }
            let avg = bound_avg(g).unwrap();
            if avg > soto {
                return Err(format!("graph {i}: ⌊d+1⌋ = {avg} > Soto {soto}"));
            }
        } else if g.is_connected() {
            return Err(format!("graph {i}: connected but Soto bound absent"));
        }
    }
    Ok(format!(
        "{} graphs ({connected} connected), 0 violations",
        corpus.len()
    ))
}

fn c5_exact_case() -> Result<String, String> {
    for n in 2..=8 {
        let k = Graph::complete(n);
        let case = exact_case(&k).unwrap();
        let chi = exact_chromatic(&k, EXACT_LIMIT).unwrap();
        if case != Some(n) || chi != n {
            return Err(format!("K{n}: exact_case {case:?}, χ = {chi}"));
        }
    }
    let mut present = 0;
    for (i, g) in small_corpus().iter().enumerate() {
        if let Some(v) = exact_case(g).unwrap() {
            present += 1;
            let chi = exact_chromatic(g, EXACT_LIMIT).unwrap();
            if v != chi {
                return Err(format!("graph {i}: exact_case {v} but χ = {chi}"));
            }
        }
    }
    Ok(format!(
        "K2..K8 exact; {present} corpus graphs with the exact case, 0 violations"
    ))
}

fn c6_karp_structure() -> Result<String, String> {
    let start = Instant::now();
    let formulas = karp_formulas(200, 6, 8, 5000);
    let mut non_ah = Vec::new();
    for (i, f) in formulas.iter().enumerate() {
        let (c, l) = (f.num_clauses(), f.num_literals());
        let g = karp_graph(f).unwrap().graph;
        let p = predicted_stats(c, l).unwrap();
        if g.n() != 6 * c + l + 3 || 2 * g.m() != 24 * c + 3 * l + 6 {
            return Err(format!(
                "formula {i}: |V| = {}, |E| = {} (C={c}, L={l})",
                g.n(),
                g.m()
            ));
        }
        if (g.n(), 2 * g.m(), g.average_degree()) != (p.vertices, p.edges_times_2, p.density) {
            return Err(format!("formula {i}: statistics differ from prediction"));
        }
        let d = g.average_degree();
        if d != Fraction::new(3 * (8 * c + l + 2) as i64, (6 * c + l + 3) as i64)
            || d >= Fraction::from_int(4)
        {
            return Err(format!("formula {i}: d = {d}"));
        }
        if (0..g.n()).any(|v| g.degree(v) < 2) {
            return Err(format!("formula {i}: vertex of degree < 2"));
        }
        if g.edges()
            .iter()
            .any(|&(u, v)| g.degree(u) == 2 && g.degree(v) == 2)
        {
            return Err(format!("formula {i}: adjacent degree-2 vertices"));
        }
        if !g.is_connected() {
            return Err(format!("formula {i}: disconnected"));
        }
        let verdict = is_average_hereditary(&g).unwrap();
        if !verdict.is_ah {
            let w = verdict.witness.expect("non-AH verdict carries a witness");
            let (h, _) = g.induced_subgraph(&w.subgraph_vertices).unwrap();
            if h.average_degree() <= d {
                return Err(format!("formula {i}: non-AH witness is not denser than G"));
            }
            non_ah.push(format!(
                "#{i} (vars={}, C={c}): d(G) = {d}, induced H on {} of {} vertices has d(H) = {}",
                f.num_vars(),
                h.n(),
                g.n(),
                h.average_degree()
            ));
        }
    }
    if !non_ah.is_empty() {
        return Err(format!(
            "{} of {} instances are not average hereditary (counts, degrees and connectivity all hold); first: {}",
            non_ah.len(),
            formulas.len(),
            non_ah[0]
        ));
    }
    within(
        start,
        30,
        format!("{} formulas, 0 violations", formulas.len()),
    )
}

/// All formulas with `num_vars` variables and `num_clauses` ordered clauses
/// of three ordered literal slots in which every variable occurs.
fn all_formulas(num_vars: usize, num_clauses: usize) -> Vec<CnfFormula> {
    let lits: Vec<i64> = (1..=num_vars as i64).flat_map(|v| [v, -v]).collect();
    let mut clauses = Vec::new();
    for &a in &lits {
        for &b in &lits {
            for &c in &lits {
                clauses.push([a, b, c]);
            }
        }
    }
    let mut out = Vec::new();
    let total = clauses.len().pow(num_clauses as u32);
    for mut code in 0..total {
        let chosen: Vec<[i64; 3]> = (0..num_clauses)
            .map(|_| {
                let c = clauses[code % clauses.len()];
                code /= clauses.len();
                c
            })
            .collect();
        if (1..=num_vars as i64).all(|v| chosen.iter().flatten().any(|l| l.abs() == v)) {
            let cl = chosen
                .iter()
                .map(|c| c.map(|x| Literal::from_dimacs(x).unwrap()))
                .collect();
            out.push(CnfFormula::new(num_vars, cl).unwrap());
        }
    }
    out
}

fn c7_reduction_correctness() -> Result<String, String> {
    let start = Instant::now();
    let mut formulas = Vec::new();
    for vars in 1..=2 {
        for clauses in 1..=2 {
            formulas.extend(all_formulas(vars, clauses));
        }
    }
    let exhaustive = formulas.len();
    formulas.extend(karp_formulas(100, 4, 3, 9000));
    let mut max_n = 0;
    for (i, f) in formulas.iter().enumerate() {
        let g = karp_graph(f).unwrap().graph;
        max_n = max_n.max(g.n());
        let sat = sat_bruteforce(f).unwrap();
        let chi = exact_chromatic(&g, EXACT_LIMIT).unwrap();
        if sat != (chi <= 3) {
            return Err(format!("formula {i}: satisfiable = {sat}, χ = {chi}"));
        }
    }
    within(
        start,
        300,
        format!("{exhaustive} exhaustive + 100 random formulas, n <= {max_n}, 0 mismatches"),
    )
}

fn c8_performance() -> Result<String, String> {
    let g = gnp(2000, 20_000.0 / 1_999_000.0, 2024).unwrap();
    let start = Instant::now();
    let value = mad(&g).unwrap();
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(10) {
        return Err(format!("mad on n=2000, m={} took {elapsed:?}", g.m()));
    }
    // The verdict-bearing modules carry no floating-point types outside tests.
    let sources = [
        ("fraction.rs", include_str!("../../core/src/fraction.rs")),
        ("graph.rs", include_str!("../../core/src/graph.rs")),
        ("flow.rs", include_str!("../../core/src/flow.rs")),
        ("density.rs", include_str!("../../core/src/density.rs")),
        ("bounds.rs", include_str!("../../core/src/bounds.rs")),
        ("coloring.rs", include_str!("../../core/src/coloring.rs")),
        ("reduction.rs", include_str!("../../core/src/reduction.rs")),
    ];
    for (name, text) in sources {
        let body = text.split("#[cfg(test)]").next().unwrap();
        if body.contains("f64") || body.contains("f32") {
            return Err(format!("{name} uses floating point"));
        }
    }
    Ok(format!(
        "n=2000, m={}, MAD {value} in {elapsed:.2?}; float audit clean",
        g.m()
    ))
}

fn run_cli(args: &[&str], cwd: &Path) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_avghered"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("spawn avghered");
    assert!(
        out.status.success(),
        "avghered {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn c9_determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    run_cli(
        &[
            "gen", "gnp", "--n", "12", "--p", "0.4", "--seed", "3", "-o", "g.col",
        ],
        d,
    );
    run_cli(
        &[
            "gen",
            "cnf",
            "--vars",
            "4",
            "--clauses",
            "3",
            "--seed",
            "8",
            "-o",
            "f.cnf",
        ],
        d,
    );
    let read = |name: &str| std::fs::read(d.join(name)).unwrap();
    let mut checks = 0;
    let mut same = |label: &str, a: Vec<u8>, b: Vec<u8>| {
        checks += 1;
        if a == b && !a.is_empty() {
            Ok(())
        } else {
            Err(format!("{label} output differs between runs"))
        }
    };
    for fmt in [&["--json"][..], &["--csv"], &[]] {
        let args: Vec<&str> = ["bounds", "g.col", "--exact"]
            .iter()
            .chain(fmt)
            .copied()
            .collect();
        same("bounds", run_cli(&args, d), run_cli(&args, d))?;
    }
    run_cli(&["reduce", "f.cnf", "-o", "a.col"], d);
    run_cli(&["reduce", "f.cnf", "-o", "b.col"], d);
    same("reduce graph", read("a.col"), read("b.col"))?;
    same(
        "reduce metadata",
        read("a.col.meta.json"),
        read("b.col.meta.json"),
    )?;
    same(
        "reduce stdout",
        run_cli(&["reduce", "f.cnf"], d),
        read("a.col"),
    )?;
    for out in ["x.csv", "y.csv"] {
        run_cli(
            &[
                "compare", "gnp", "--n", "12", "--p", "0.3", "--trials", "60", "--seed", "42",
                "--exact", "-o", out,
            ],
            d,
        );
    }
    same("compare", read("x.csv"), read("y.csv"))?;
    let tree_args = [
        "compare", "tree", "--n", "50", "--trials", "100", "--seed", "1",
    ];
    same(
        "compare tree",
        run_cli(&tree_args, d),
        run_cli(&tree_args, d),
    )?;
    Ok(format!("{checks} repeated-run comparisons byte-identical"))
}

fn within(start: Instant, secs: u64, detail: String) -> Result<String, String> {
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(secs) {
        Err(format!("{detail}, but took {elapsed:.2?} (limit {secs} s)"))
    } else {
        Ok(format!("{detail} in {elapsed:.2?}"))
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 MAD oracle equivalence", c1_mad_oracle),
        ("2 class membership", c2_class_membership),
        ("3 χ ≤ ⌊MAD⌋+1", c3_mad_bound),
        ("4 bound domination", c4_bound_domination),
        ("5 exact chromatic case", c5_exact_case),
        ("6 Karp reduction structure", c6_karp_structure),
        ("7 reduction correctness", c7_reduction_correctness),
        ("8 performance", c8_performance),
        ("9 determinism", c9_determinism),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (name, check) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let outcome = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
