//! Densest subgraph and maximum average degree (MAD) via min-cut, plus the
//! average-hereditary test `d(G) == MAD(G)`.
//!
//! For a guess `a/b` the network has a source arc `s -> v` of capacity `m*b`
//! for every vertex, arcs `u -> v` and `v -> u` of capacity `b` for every
//! edge, and sink arcs `v -> t` of capacity `m*b + 2a - b*deg(v)`. A cut with
//! source side `{s} ∪ S` costs `n*m*b + 2|S|(a - b*|E(S)|/|S|)`, so the
//! minimum cut is below `n*m*b` exactly when some `S` is denser than `a/b`.

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::fraction::Fraction;
use crate::graph::Graph;

/// A densest vertex set and its exact density `|E(S)| / |S|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensestResult {
    /// Sorted, nonempty.
    pub subgraph_vertices: Vec<usize>,
    pub density: Fraction,
    /// Maximum average degree, `2 * density`.
    pub mad: Fraction,
}

impl DensestResult {
    fn from_set(g: &Graph, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        let inside = g.edges_within(&vertices).expect("vertex ids come from g");
        let density = Fraction::new(inside as i64, vertices.len() as i64);
        DensestResult {
            subgraph_vertices: vertices,
            density,
            mad: density * 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AhVerdict {
    pub is_ah: bool,
    /// Densest subgraph, present iff `!is_ah`. Its average degree exceeds
    /// that of the whole graph.
    pub witness: Option<DensestResult>,
}

/// Returns `Some(S)` if some nonempty vertex set has density strictly
/// greater than `guess`, where `S` is such a set (the vertex part of the
/// canonical minimal source side of the min cut), and `None` otherwise.
pub fn goldberg_feasible(g: &Graph, guess: Fraction) -> Result<Option<Vec<usize>>> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    if guess < Fraction::ZERO {
        return Err(Error::BadParams(format!("negative density guess {guess}")));
    }
    let (a, b) = (guess.num(), guess.den());
    let (n, m) = (g.n() as i64, g.m() as i64);
    let overflow = || Error::BadParams(format!("capacities overflow for guess {guess}"));
    let source_cap = m.checked_mul(b).ok_or_else(overflow)?;
    let threshold = source_cap.checked_mul(n).ok_or_else(overflow)?;
    let two_a = a.checked_mul(2).ok_or_else(overflow)?;

    let (s, t) = (g.n(), g.n() + 1);
    let mut arcs = Vec::with_capacity(2 * g.n() + 2 * g.m());
    arcs.extend((0..g.n()).map(|v| (s, v, source_cap)));
    for &(u, v) in g.edges() {
        arcs.push((u, v, b));
        arcs.push((v, u, b));
    }
    for v in 0..g.n() {
        let cap = source_cap
            .checked_add(two_a)
            .and_then(|c| c.checked_sub(b * g.degree(v) as i64))
            .ok_or_else(overflow)?;
        arcs.push((v, t, cap));
    }
    let mut net = FlowNetwork::new(g.n() + 2, &arcs)?;
    let cut = net.max_flow_min_cut(s, t)?;
    if cut.flow_value < threshold {
        let side: Vec<usize> = cut.source_side.into_iter().filter(|&v| v != s).collect();
        debug_assert!(!side.is_empty());
        Ok(Some(side))
    } else {
        Ok(None)
    }
}

/// Exact densest subgraph.
///
/// Binary search runs over guesses `k / D` with `D = n(n-1)`. Two distinct
/// subgraph densities `e1/s1 != e2/s2` with `s1, s2 <= n` differ by at least
/// `1/D`, so once the search pins the optimum inside a half-open window
/// `(k/D, (k+1)/D]` the best witness found so far is optimal.
pub fn densest_subgraph(g: &Graph) -> Result<DensestResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.m() == 0 {
        return Ok(DensestResult::from_set(g, vec![0]));
    }
    let n = g.n() as i64;
    let grid = n * (n - 1);
    // Largest k with k/D strictly below `x`.
    let below = |x: Fraction| (x * grid).ceil() - 1;

    let mut best = DensestResult::from_set(g, (0..g.n()).collect());
    // Invariants: best.density > lo / D and optimum <= (hi + 1) / D.
    let mut lo = below(best.density);
    let upper = Fraction::new(g.max_degree().min(g.n() - 1) as i64, 2);
    let mut hi = below(upper);
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        match goldberg_feasible(g, Fraction::new(mid, grid))? {
            Some(side) => {
                let found = DensestResult::from_set(g, side);
                debug_assert!(found.density > Fraction::new(mid, grid));
                lo = below(found.density).max(mid);
                best = found;
            }
            None => hi = mid - 1,
        }
    }
    Ok(best)
}

/// Maximum average degree: twice the densest-subgraph density.
pub fn mad(g: &Graph) -> Result<Fraction> {
    Ok(densest_subgraph(g)?.mad)
}

pub const BRUTEFORCE_LIMIT: usize = 20;

/// Exhaustive densest subgraph over all `2^n - 1` nonempty vertex sets.
/// Ties go to the lexicographically smallest sorted vertex sequence.
pub fn mad_bruteforce(g: &Graph) -> Result<DensestResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            size: n,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let members = |mask: u32| -> Vec<usize> { (0..n).filter(|&v| mask >> v & 1 == 1).collect() };

    let mut best_mask = 0u32;
    let mut best = Fraction::from_int(-1);
    for mask in 1u32..(1u32 << n) {
        let twice_edges: u32 = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (adj[v] & mask).count_ones())
            .sum();
        let density = Fraction::new(twice_edges as i64 / 2, mask.count_ones() as i64);
        if density > best || (density == best && members(mask) < members(best_mask)) {
            best = density;
            best_mask = mask;
        }
    }
    Ok(DensestResult::from_set(g, members(best_mask)))
}

/// Decides whether every induced subgraph has average degree at most
/// `d(G)`, by comparing `d(G)` with `MAD(G)` exactly. The null graph is
/// vacuously average hereditary.
pub fn is_average_hereditary(g: &Graph) -> Result<AhVerdict> {
    if g.n() == 0 {
        return Ok(AhVerdict {
            is_ah: true,
            witness: None,
        });
    }
    let densest = densest_subgraph(g)?;
    let is_ah = densest.mad == g.average_degree();
    Ok(AhVerdict {
        is_ah,
        witness: (!is_ah).then_some(densest),
    })
}
