//! Degeneracy-order greedy coloring and an exact chromatic-number search for
//! small graphs.

use std::collections::BTreeSet;

use crate::bounds::lower_clique;
use crate::error::{Error, Result};
use crate::graph::{is_permutation, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    /// `1 + max color`, or 0 for the null graph.
    pub num_colors: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let num_colors = colors.iter().max().map_or(0, |&c| c + 1);
        Coloring { colors, num_colors }
    }
}

/// Smallest-last vertex order. Every vertex has at most `degeneracy`
/// neighbors earlier in `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrder {
    pub order: Vec<usize>,
    pub degeneracy: usize,
}

/// Repeatedly removes a minimum-degree vertex (smallest id on ties); the
/// order is the removal sequence reversed.
pub fn degeneracy_order(g: &Graph) -> Result<DegeneracyOrder> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..g.n()).map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    order.reverse();
    Ok(DegeneracyOrder { order, degeneracy })
}

/// First-fit coloring along `order`.
pub fn greedy_color(g: &Graph, order: &[usize]) -> Result<Coloring> {
    if order.len() != g.n() || !is_permutation(order) {
        return Err(Error::NotAPermutation(g.n()));
    }
    let mut colors = vec![usize::MAX; g.n()];
    let mut taken: Vec<bool> = Vec::new();
    for &v in order {
        taken.clear();
        taken.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            if let Some(t) = taken.get_mut(colors[w]) {
                *t = true;
            }
        }
        colors[v] = taken.iter().position(|&t| !t).expect("degree + 1 slots");
    }
    Ok(Coloring::new(colors))
}

/// Greedy coloring on the smallest-last order; uses at most
/// `degeneracy + 1` colors.
pub fn degeneracy_coloring(g: &Graph) -> Result<(DegeneracyOrder, Coloring)> {
    let order = degeneracy_order(g)?;
    let coloring = greedy_color(g, &order.order)?;
    Ok((order, coloring))
}

pub fn validate_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.colors.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: c.colors.len(),
        });
    }
    Ok(g.edges().iter().all(|&(u, v)| c.colors[u] != c.colors[v]))
}

pub const DEFAULT_EXACT_LIMIT: usize = 30;

/// Chromatic number by backtracking, for graphs with at most `limit`
/// vertices. Tries `k` upward from the clique lower bound and stops at the
/// greedy bound.
pub fn exact_chromatic(g: &Graph, limit: usize) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() > limit {
        return Err(Error::TooLarge { size: g.n(), limit });
    }
    let (_, greedy) = degeneracy_coloring(g)?;
    let lower = lower_clique(g)?;
    for k in lower..greedy.num_colors {
        if find_coloring(g, k).is_some() {
            return Ok(k);
        }
    }
    Ok(greedy.num_colors)
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn find_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    if g.n() == 0 {
        return Some(Coloring::new(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let mut search = Search {
        g,
        k,
        colors: vec![None; g.n()],
        blocked: vec![0; g.n() * k],
    };
    search.extend(0, 0).then(|| {
        Coloring::new(
            search
                .colors
                .iter()
                .map(|c| c.expect("all colored"))
                .collect(),
        )
    })
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<Option<usize>>,
    /// `blocked[v * k + c]` counts colored neighbors of `v` with color `c`.
    blocked: Vec<u32>,
}

impl Search<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.blocked[v * self.k..(v + 1) * self.k]
            .iter()
            .filter(|&&b| b > 0)
            .count()
    }

    /// Most saturated uncolored vertex; ties by degree, then smallest id.
    fn pick(&self) -> usize {
        (0..self.g.n())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.saturation(v), self.g.degree(v), std::cmp::Reverse(v)))
            .expect("called with an uncolored vertex left")
    }

    fn set(&mut self, v: usize, c: usize, delta: i32) {
        for &w in self.g.neighbors(v) {
            let slot = &mut self.blocked[w * self.k + c];
            *slot = slot.wrapping_add_signed(delta);
        }
    }

    /// Colors are introduced in order: a vertex may only open color `used`.
    fn extend(&mut self, colored: usize, used: usize) -> bool {
        if colored == self.g.n() {
            return true;
        }
        let v = self.pick();
        for c in 0..self.k.min(used + 1) {
            if self.blocked[v * self.k + c] > 0 {
                continue;
            }
            self.colors[v] = Some(c);
            self.set(v, c, 1);
            if self.extend(colored + 1, used.max(c + 1)) {
                return true;
            }
            self.set(v, c, -1);
            self.colors[v] = None;
        }
        false
    }
}
