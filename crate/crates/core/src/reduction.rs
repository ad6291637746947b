//! Karp's 3-SAT to 3-coloring construction.
//!
//! Vertex layout: the base triangle `T = 0`, `F = 1`, `B = 2`; then for
//! variable `i` (1-based) the literal vertices `x_i = 3 + 2(i-1)` and
//! `¬x_i = 4 + 2(i-1)`; then six vertices per clause in clause order. A
//! clause `(l1 ∨ l2 ∨ l3)` gets two chained OR gadgets: `a1, b1, o1` read
//! `l1, l2`, and `a2, b2, o2` read `o1, l3`. The output `o2` is tied to `F`
//! and `B`, which forces it to take the colour of `T`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::density::is_average_hereditary;
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: usize,
    positive: bool,
}

impl Literal {
    /// `var` is 1-based.
    pub fn new(var: usize, positive: bool) -> Self {
        Literal { var, positive }
    }

    /// Parses a nonzero DIMACS literal (`3` or `-3`).
    pub fn from_dimacs(v: i64) -> Option<Self> {
        (v != 0).then(|| Literal::new(v.unsigned_abs() as usize, v > 0))
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn var(self) -> usize {
        self.var
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A 3-CNF formula over variables `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if num_vars == 0 || clauses.is_empty() {
            return Err(Error::BadParams(format!(
                "formula needs at least one variable and one clause, got {num_vars} and {}",
                clauses.len()
            )));
        }
        if let Some(l) = clauses
            .iter()
            .flatten()
            .find(|l| l.var == 0 || l.var > num_vars)
        {
            return Err(Error::BadParams(format!(
                "literal {l} out of range for {num_vars} variables"
            )));
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Clause count `C`.
    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Literal-vertex count `L = 2 * num_vars`.
    pub fn num_literals(&self) -> usize {
        2 * self.num_vars
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    fn first_unused_var(&self) -> Option<usize> {
        let mut used = vec![false; self.num_vars + 1];
        for l in self.clauses.iter().flatten() {
            used[l.var] = true;
        }
        (1..=self.num_vars).find(|&v| !used[v])
    }
}

/// Role of a vertex in the constructed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexRole {
    True,
    False,
    Base,
    PosLit(usize),
    NegLit(usize),
    /// Gadget vertex `position` (0..6: a1, b1, o1, a2, b2, o2) of clause
    /// `clause` (0-based).
    OrNode {
        clause: usize,
        position: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KarpGraph {
    pub graph: Graph,
    pub labels: Vec<VertexRole>,
}

pub const TRUE: usize = 0;
pub const FALSE: usize = 1;
pub const BASE: usize = 2;

pub fn literal_vertex(l: Literal) -> usize {
    3 + 2 * (l.var - 1) + usize::from(!l.positive)
}

/// Builds `G(φ)`. Every variable must occur in some clause.
pub fn karp_graph(formula: &CnfFormula) -> Result<KarpGraph> {
    if let Some(v) = formula.first_unused_var() {
        return Err(Error::UnusedVariable(v));
    }
    let num_vars = formula.num_vars;
    let lits = formula.num_literals();
    let n = 6 * formula.num_clauses() + lits + 3;

    let mut labels = vec![VertexRole::True, VertexRole::False, VertexRole::Base];
    let mut edges = vec![(TRUE, FALSE), (TRUE, BASE), (FALSE, BASE)];
    for i in 1..=num_vars {
        let p = literal_vertex(Literal::new(i, true));
        let q = literal_vertex(Literal::new(i, false));
        labels.push(VertexRole::PosLit(i));
        labels.push(VertexRole::NegLit(i));
        edges.extend([(p, q), (p, BASE), (q, BASE)]);
    }
    for (j, clause) in formula.clauses.iter().enumerate() {
        let first = 3 + lits + 6 * j;
        let [a1, b1, o1, a2, b2, o2] = std::array::from_fn(|k| first + k);
        labels.extend((0..6).map(|position| VertexRole::OrNode {
            clause: j,
            position,
        }));
        let [l1, l2, l3] = clause.map(literal_vertex);
        edges.extend([
            (l1, a1),
            (l2, b1),
            (a1, b1),
            (a1, o1),
            (b1, o1),
            (o1, a2),
            (l3, b2),
            (a2, b2),
            (a2, o2),
            (b2, o2),
            (o2, FALSE),
            (o2, BASE),
        ]);
    }
    debug_assert_eq!(labels.len(), n);
    let graph = Graph::new(n, &edges)?;
    Ok(KarpGraph { graph, labels })
}

/// Vertex count, twice the edge count, and average degree predicted for a
/// formula with `clauses` clauses and `literals` literal vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredictedStats {
    pub vertices: usize,
    pub edges_times_2: usize,
    pub density: Fraction,
}

pub fn predicted_stats(clauses: usize, literals: usize) -> Result<PredictedStats> {
    if clauses < 1 || literals < 2 || literals % 2 == 1 {
        return Err(Error::BadParams(format!(
            "need C >= 1 and even L >= 2, got C = {clauses}, L = {literals}"
        )));
    }
    let vertices = 6 * clauses + literals + 3;
    let edges_times_2 = 24 * clauses + 3 * literals + 6;
    let density = Fraction::new(3 * (8 * clauses + literals + 2) as i64, vertices as i64);
    Ok(PredictedStats {
        vertices,
        edges_times_2,
        density,
    })
}

/// Sidecar record written next to a generated instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionSummary {
    pub num_vars: usize,
    pub clauses: usize,
    pub literals: usize,
    pub predicted_vertices: usize,
    pub predicted_edges_times_2: usize,
    pub predicted_density: Fraction,
    pub vertices: usize,
    pub edges_times_2: usize,
    pub density: Fraction,
    pub is_ah: bool,
}

impl ReductionSummary {
    pub fn matches_prediction(&self) -> bool {
        self.vertices == self.predicted_vertices
            && self.edges_times_2 == self.predicted_edges_times_2
            && self.density == self.predicted_density
    }
}

/// Builds `G(φ)` and records predicted against actual statistics.
pub fn reduce(formula: &CnfFormula) -> Result<(KarpGraph, ReductionSummary)> {
    let karp = karp_graph(formula)?;
    let predicted = predicted_stats(formula.num_clauses(), formula.num_literals())?;
    let g = &karp.graph;
    let summary = ReductionSummary {
        num_vars: formula.num_vars(),
        clauses: formula.num_clauses(),
        literals: formula.num_literals(),
        predicted_vertices: predicted.vertices,
        predicted_edges_times_2: predicted.edges_times_2,
        predicted_density: predicted.density,
        vertices: g.n(),
        edges_times_2: 2 * g.m(),
        density: g.average_degree(),
        is_ah: is_average_hereditary(g)?.is_ah,
    };
    Ok((karp, summary))
}

pub const SAT_BRUTEFORCE_LIMIT: usize = 20;

/// Tries all `2^num_vars` assignments.
pub fn sat_bruteforce(formula: &CnfFormula) -> Result<bool> {
    let n = formula.num_vars;
    if n > SAT_BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            size: n,
            limit: SAT_BRUTEFORCE_LIMIT,
        });
    }
    let mut assignment = vec![false; n];
    Ok((0u32..1 << n).any(|mask| {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = mask >> i & 1 == 1;
        }
        formula.is_satisfied_by(&assignment)
    }))
}
