//! Chromatic-number bounds and the comparison report.

use serde::{Deserialize, Serialize};

use crate::coloring::{degeneracy_coloring, exact_chromatic};
use crate::density::{densest_subgraph, is_average_hereditary};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::Graph;

/// Every bound computed for one graph. Field order is the serialization
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub avg_degree: Fraction,
    #[serde(rename = "mad")]
    pub mad_value: Fraction,
    pub is_ah: bool,
    pub bound_mad: usize,
    pub bound_delta: usize,
    pub bound_brooks: Option<usize>,
    /// Absent when the graph is disconnected.
    pub bound_soto: Option<usize>,
    pub lower_clique: usize,
    pub exact_case: Option<usize>,
    pub degeneracy: usize,
    pub greedy_colors: usize,
    /// Present only when the exact search ran.
    pub exact_chromatic: Option<usize>,
}

fn nonempty(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

fn floor_plus_one(x: Fraction) -> usize {
    usize::try_from(x.floor() + 1).expect("densities are nonnegative")
}

/// `⌊MAD(G) + 1⌋`.
pub fn bound_mad(g: &Graph) -> Result<usize> {
    Ok(floor_plus_one(densest_subgraph(g)?.mad))
}

/// `⌊d(G) + 1⌋`.
pub fn bound_avg(g: &Graph) -> Result<usize> {
    nonempty(g)?;
    Ok(floor_plus_one(g.average_degree()))
}

/// `Δ(G) + 1`.
pub fn bound_delta(g: &Graph) -> Result<usize> {
    nonempty(g)?;
    Ok(g.max_degree() + 1)
}

/// Brooks' bound taken per connected component: `k` for a component that
/// is `K_k`, 3 for an odd cycle, and the component's maximum degree
/// otherwise. The result is the maximum over components.
pub fn bound_brooks(g: &Graph) -> Result<Option<usize>> {
    nonempty(g)?;
    let best = g
        .connected_components()
        .iter()
        .map(|comp| {
            let k = comp.len();
            let inside = g.edges_within(comp).expect("component ids are valid");
            let delta = comp.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
            if inside == k * (k - 1) / 2 {
                k
            } else if k % 2 == 1 && comp.iter().all(|&v| g.degree(v) == 2) {
                3
            } else {
                delta
            }
        })
        .max();
    Ok(best)
}

/// `⌊(3 + √(9 + 8(m - n))) / 2⌋` for connected graphs, computed with an
/// exact integer square root. `None` when the graph is not connected.
pub fn bound_soto(g: &Graph) -> Option<usize> {
    if !g.is_connected() {
        return None;
    }
    let radicand = 9 + 8 * (g.m() as i64 - g.n() as i64);
    debug_assert!(radicand >= 1, "connected graphs have m >= n - 1");
    let root = (radicand as u64).isqrt();
    // ⌊(3 + √x) / 2⌋ == ⌊(3 + ⌊√x⌋) / 2⌋
    Some(((3 + root) / 2) as usize)
}

/// `⌈n² / (n² - 2m)⌉`, a lower bound on the clique number.
pub fn lower_clique(g: &Graph) -> Result<usize> {
    nonempty(g)?;
    let n2 = (g.n() as u64).pow(2);
    let den = n2 - 2 * g.m() as u64;
    Ok(n2.div_ceil(den) as usize)
}

/// `Some(⌊d(G) + 1⌋)` when the graph is average hereditary and
/// `⌈n / (n - d(G))⌉ = ⌊d(G) + 1⌋`; the chromatic number then equals this
/// value.
pub fn exact_case(g: &Graph) -> Result<Option<usize>> {
    let upper = bound_avg(g)?;
    if lower_clique(g)? != upper {
        return Ok(None);
    }
    Ok(is_average_hereditary(g)?.is_ah.then_some(upper))
}

/// Computes every bound. The exact chromatic number is included when
/// `run_exact` is set and `n <= exact_limit`.
pub fn bounds_report(g: &Graph, run_exact: bool, exact_limit: usize) -> Result<BoundsReport> {
    nonempty(g)?;
    let densest = densest_subgraph(g)?;
    let avg_degree = g.average_degree();
    let is_ah = densest.mad == avg_degree;
    let bound_mad = floor_plus_one(densest.mad);
    let lower = lower_clique(g)?;
    let upper_avg = floor_plus_one(avg_degree);
    let (order, greedy) = degeneracy_coloring(g)?;
    let exact_chromatic = if run_exact && g.n() <= exact_limit {
        Some(exact_chromatic(g, exact_limit)?)
    } else {
        None
    };
    let report = BoundsReport {
        n: g.n(),
        m: g.m(),
        avg_degree,
        mad_value: densest.mad,
        is_ah,
        bound_mad,
        bound_delta: bound_delta(g)?,
        bound_brooks: bound_brooks(g)?,
        bound_soto: bound_soto(g),
        lower_clique: lower,
        exact_case: (is_ah && lower == upper_avg).then_some(upper_avg),
        degeneracy: order.degeneracy,
        greedy_colors: greedy.num_colors,
        exact_chromatic,
    };
    debug_assert!(report.bound_mad <= report.bound_delta);
    Ok(report)
}
