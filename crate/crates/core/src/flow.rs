//! Integer max-flow / min-cut (Dinic's algorithm).

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A directed network with integer capacities. Arc `i` of the input is
/// stored as residual edge `2i` with its reverse at `2i + 1`.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    nodes: usize,
    arcs: Vec<(usize, usize, i64)>,
    to: Vec<usize>,
    residual: Vec<i64>,
    out: Vec<Vec<usize>>,
}

/// Outcome of a max-flow solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub flow_value: i64,
    /// Nodes reachable from the source in the final residual graph, sorted.
    /// This is the inclusion-minimal source side among all minimum cuts.
    pub source_side: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, arcs: &[(usize, usize, i64)]) -> Result<Self> {
        let mut to = Vec::with_capacity(2 * arcs.len());
        let mut residual = Vec::with_capacity(2 * arcs.len());
        let mut out = vec![Vec::new(); nodes];
        // Every flow value and residual capacity is bounded by the total.
        let mut total: i64 = 0;
        for &(from, dest, capacity) in arcs {
            let fits = total
                .checked_add(capacity)
                .inspect(|&t| total = t)
                .is_some();
            if from >= nodes || dest >= nodes || capacity < 0 || !fits {
                return Err(Error::InvalidArc {
                    from,
                    to: dest,
                    capacity,
                    nodes,
                });
            }
            out[from].push(to.len());
            to.push(dest);
            residual.push(capacity);
            out[dest].push(to.len());
            to.push(from);
            residual.push(0);
        }
        Ok(FlowNetwork {
            nodes,
            arcs: arcs.to_vec(),
            to,
            residual,
            out,
        })
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn arcs(&self) -> &[(usize, usize, i64)] {
        &self.arcs
    }

    /// Current flow on each input arc, in input order.
    pub fn flows(&self) -> Vec<i64> {
        self.arcs
            .iter()
            .enumerate()
            .map(|(i, &(_, _, cap))| cap - self.residual[2 * i])
            .collect()
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.nodes];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in &self.out[v] {
                let w = self.to[e];
                if self.residual[e] > 0 && level[w] == usize::MAX {
                    level[w] = level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        level
    }

    /// Blocking flow on the current level graph using an explicit path
    /// stack instead of recursion.
    fn blocking_flow(&mut self, s: usize, t: usize, level: &mut [usize]) -> i64 {
        let mut next = vec![0usize; self.nodes];
        let mut path: Vec<usize> = Vec::new();
        let mut total = 0;
        let mut v = s;
        loop {
            if v == t {
                let push = path.iter().map(|&e| self.residual[e]).min().unwrap_or(0);
                let mut retreat_to = None;
                for (i, &e) in path.iter().enumerate() {
                    self.residual[e] -= push;
                    self.residual[e ^ 1] += push;
                    if self.residual[e] == 0 && retreat_to.is_none() {
                        retreat_to = Some(i);
                    }
                }
                total += push;
                let keep = retreat_to.unwrap_or(0);
                path.truncate(keep);
                v = path.last().map_or(s, |&e| self.to[e]);
                continue;
            }
            let mut advanced = false;
            while next[v] < self.out[v].len() {
                let e = self.out[v][next[v]];
                let w = self.to[e];
                if self.residual[e] > 0 && level[w] == level[v] + 1 {
                    path.push(e);
                    v = w;
                    advanced = true;
                    break;
                }
                next[v] += 1;
            }
            if advanced {
                continue;
            }
            if v == s {
                return total;
            }
            // dead end
            level[v] = usize::MAX;
            let e = path
                .pop()
                .expect("non-source node has an incoming path arc");
            v = self.to[e ^ 1];
            next[v] += 1;
        }
    }

    /// Solves max-flow from `s` to `t`. The network keeps the final flow, so
    /// a second call returns the same value with no further augmentation.
    pub fn max_flow_min_cut(&mut self, s: usize, t: usize) -> Result<CutResult> {
        for v in [s, t] {
            if v >= self.nodes {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.nodes,
                });
            }
        }
        if s == t {
            return Err(Error::SourceEqualsSink(s));
        }
        let mut flow_value = 0i64;
        loop {
            let mut level = self.levels(s);
            if level[t] == usize::MAX {
                break;
            }
            flow_value += self.blocking_flow(s, t, &mut level);
        }
        // Flow already pushed by an earlier solve counts too.
        let outflow: i64 = self
            .arcs
            .iter()
            .zip(self.flows())
            .map(|(&(from, to, _), f)| {
                if from == s && to != s {
                    f
                } else if to == s && from != s {
                    -f
                } else {
                    0
                }
            })
            .sum();
        debug_assert!(outflow >= flow_value);
        let level = self.levels(s);
        let source_side: Vec<usize> = (0..self.nodes)
            .filter(|&v| level[v] != usize::MAX)
            .collect();
        let cut = self.cut_capacity(&source_side);
        assert_eq!(cut, outflow, "max-flow min-cut equality violated");
        Ok(CutResult {
            flow_value: outflow,
            source_side,
        })
    }

    /// Total capacity of arcs leaving `side`.
    pub fn cut_capacity(&self, side: &[usize]) -> i64 {
        let mut mark = vec![false; self.nodes];
        for &v in side {
            mark[v] = true;
        }
        self.arcs
            .iter()
            .filter(|&&(from, to, _)| mark[from] && !mark[to])
            .map(|&(_, _, cap)| cap)
            .sum()
    }
}
