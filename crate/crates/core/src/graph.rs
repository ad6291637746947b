//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::fraction::Fraction;

/// Immutable simple graph. Edges are stored canonically as `(u, v)` with
/// `u < v`, sorted; adjacency lists are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    /// `Some(k)` iff every vertex has degree `k`.
    pub regular_k: Option<usize>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, repeated
    /// pairs (in either orientation) and out-of-range endpoints.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edge_list.len());
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(a, b));
            }
            edges.push(e);
        }
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// The star K_{1,leaves} with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).expect("petersen edges are valid")
    }

    /// Vertex-disjoint union; the second graph's ids are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::new(self.n + other.n, &edges).expect("disjoint union is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// `2m / n`, and `0` for the null graph.
    pub fn average_degree(&self) -> Fraction {
        if self.n == 0 {
            return Fraction::ZERO;
        }
        Fraction::new(2 * self.m() as i64, self.n as i64)
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let min_degree = self.adj.iter().map(Vec::len).min().unwrap_or(0);
        let max_degree = self.adj.iter().map(Vec::len).max().unwrap_or(0);
        Ok(DegreeStats {
            min_degree,
            max_degree,
            regular_k: (min_degree == max_degree).then_some(min_degree),
        })
    }

    /// Maximum degree, `0` for the null graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn check_ids(&self, ids: &[usize]) -> Result<()> {
        match ids.iter().find(|&&v| v >= self.n) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    fn membership(&self, ids: &[usize]) -> Vec<bool> {
        let mut mark = vec![false; self.n];
        for &v in ids {
            mark[v] = true;
        }
        mark
    }

    /// Subgraph induced by `keep`, reindexed to `0..|keep|` in ascending id
    /// order. Returns the graph and `remap[new] = old`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        self.check_ids(keep)?;
        let mut remap = keep.to_vec();
        remap.sort_unstable();
        remap.dedup();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in remap.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        let g = Graph::new(remap.len(), &edges)?;
        Ok((g, remap))
    }

    /// Number of edges inside the vertex set `s` (duplicates ignored).
    pub fn edges_within(&self, s: &[usize]) -> Result<usize> {
        self.check_ids(s)?;
        let mark = self.membership(s);
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| mark[u] && mark[v])
            .count())
    }

    /// Number of edges with exactly one endpoint in `s_side`.
    pub fn cut_size(&self, s_side: &[usize]) -> Result<usize> {
        self.check_ids(s_side)?;
        let mark = self.membership(s_side);
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| mark[u] != mark[v])
            .count())
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// True for graphs with exactly one component. The null graph is not
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_components().len() == 1
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n || !is_permutation(perm) {
            return Err(Error::NotAPermutation(self.n));
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n, &edges)
    }
}

pub(crate) fn is_permutation(order: &[usize]) -> bool {
    let mut seen = vec![false; order.len()];
    for &v in order {
        if v >= order.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}
