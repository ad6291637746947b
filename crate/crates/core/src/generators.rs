//! Seeded random instance generators.
//!
//! Every generator draws from a ChaCha8 stream seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`, so outputs are byte-for-byte
//! reproducible from the seed.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduction::{CnfFormula, Literal};

/// Attempts made by the pairing model before giving up.
pub const PAIRING_ATTEMPTS: usize = 10_000;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent seed for trial `index` of a run seeded with `seed`: the first
/// word of ChaCha8 stream number `index`. Does not depend on how many trials
/// run or in what order.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    let mut rng = rng_from_seed(seed);
    rng.set_stream(index);
    rng.next_u64()
}

/// Uniform random labeled tree on `n` vertices, decoded from a random
/// Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    match n {
        0 => return Err(Error::BadParams("tree needs n >= 1".into())),
        1 => return Ok(Graph::empty(1)),
        2 => return Graph::new(2, &[(0, 1)]),
        _ => {}
    }
    let mut rng = rng_from_seed(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::new(n, &prufer_decode(n, &code))
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut remaining = vec![1usize; n];
    for &v in code {
        remaining[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let Reverse(leaf) = leaves
            .pop()
            .expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, v));
        remaining[v] -= 1;
        if remaining[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// Random simple `k`-regular graph from the pairing (configuration) model,
/// rejecting pairings with loops or repeated edges.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k >= n || (n * k) % 2 == 1 {
        return Err(Error::InfeasibleDegree { n, k });
    }
    if k == n - 1 {
        return Ok(Graph::complete(n));
    }
    let mut rng = rng_from_seed(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut seen = HashSet::with_capacity(points.len() / 2);
        let mut edges = Vec::with_capacity(points.len() / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return Graph::new(n, &edges);
    }
    Err(Error::RetryExhausted(PAIRING_ATTEMPTS))
}

/// Erdős–Rényi G(n, p): pairs `(u, v)`, `u < v`, are visited in
/// lexicographic order and each is kept when a uniform draw in `[0, 1)` is
/// below `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// `K_a` on vertices `0..a` with a path on `a..a+b` whose first vertex is
/// joined to clique vertex `a - 1`.
pub fn clique_plus_path(a: usize, b: usize) -> Result<Graph> {
    if a < 3 || b < 1 {
        return Err(Error::BadParams(format!(
            "clique-plus-path needs a >= 3 and b >= 1, got a = {a}, b = {b}"
        )));
    }
    let mut edges: Vec<_> = (0..a)
        .flat_map(|u| (u + 1..a).map(move |v| (u, v)))
        .collect();
    edges.push((a - 1, a));
    edges.extend((a + 1..a + b).map(|v| (v - 1, v)));
    Graph::new(a + b, &edges)
}

pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng_from_seed(seed));
    perm
}

/// Random 3-CNF in which every variable occurs. Each variable is first
/// placed in a distinct random slot; the remaining slots get uniform random
/// variables. Polarities are uniform.
pub fn random_3cnf(num_vars: usize, num_clauses: usize, seed: u64) -> Result<CnfFormula> {
    if num_vars == 0 || num_clauses == 0 || num_vars > 3 * num_clauses {
        return Err(Error::BadParams(format!(
            "cannot use {num_vars} variables in {num_clauses} three-literal clauses"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let slots = 3 * num_clauses;
    let mut order: Vec<usize> = (0..slots).collect();
    order.shuffle(&mut rng);
    let mut vars = vec![0usize; slots];
    for (i, &slot) in order.iter().enumerate() {
        vars[slot] = if i < num_vars {
            i + 1
        } else {
            rng.random_range(1..=num_vars)
        };
    }
    let clauses = vars
        .chunks_exact(3)
        .map(|c| {
            let mut lit = |v: usize| Literal::new(v, rng.random::<bool>());
            [lit(c[0]), lit(c[1]), lit(c[2])]
        })
        .collect();
    CnfFormula::new(num_vars, clauses)
}
