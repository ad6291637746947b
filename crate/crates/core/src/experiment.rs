//! Bound-comparison sweeps over random instance families.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::bounds_report;
use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::reduction::karp_graph;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Tree {
        n: usize,
    },
    Regular {
        n: usize,
        k: usize,
    },
    Gnp {
        n: usize,
        p: f64,
    },
    CliquePath {
        a: usize,
        b: usize,
    },
    /// Karp graph of a random 3-CNF using every variable.
    Karp {
        vars: usize,
        clauses: usize,
    },
}

impl Family {
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        match *self {
            Family::Tree { n } => generators::random_tree(n, seed),
            Family::Regular { n, k } => generators::random_regular(n, k, seed),
            Family::Gnp { n, p } => generators::gnp(n, p, seed),
            Family::CliquePath { a, b } => generators::clique_plus_path(a, b),
            Family::Karp { vars, clauses } => {
                let formula = generators::random_3cnf(vars, clauses, seed)?;
                Ok(karp_graph(&formula)?.graph)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Tree { n } => write!(f, "tree:n={n}"),
            Family::Regular { n, k } => write!(f, "regular:n={n}:k={k}"),
            Family::Gnp { n, p } => write!(f, "gnp:n={n}:p={p}"),
            Family::CliquePath { a, b } => write!(f, "clique-path:a={a}:b={b}"),
            Family::Karp { vars, clauses } => write!(f, "karp:vars={vars}:clauses={clauses}"),
        }
    }
}

/// One trial of a sweep. `seed` regenerates the trial's graph directly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub family: String,
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub is_ah: bool,
    pub bound_mad: usize,
    pub bound_delta: usize,
    pub bound_brooks: Option<usize>,
    pub bound_soto: Option<usize>,
    pub lower_clique: usize,
    pub degeneracy_plus_one: usize,
    pub greedy_colors: usize,
    pub exact_chromatic: Option<usize>,
}

/// Runs `trials` independent trials; trial `i` uses
/// [`generators::trial_seed`]`(seed, i)`. Trials run in parallel and rows
/// come back in trial order. Fails if any row breaks
/// `⌊MAD+1⌋ <= Δ+1`, `⌊MAD+1⌋ <=` the Soto bound on connected graphs, or
/// `χ <= ⌊MAD+1⌋` when χ was computed.
pub fn run_compare(
    family: Family,
    trials: usize,
    seed: u64,
    exact_limit: Option<usize>,
) -> Result<Vec<ExperimentRow>> {
    let tag = family.to_string();
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let trial_seed = generators::trial_seed(seed, trial as u64);
            let g = family.generate(trial_seed)?;
            let r = bounds_report(&g, exact_limit.is_some(), exact_limit.unwrap_or(0))?;
            let row = ExperimentRow {
                family: tag.clone(),
                trial,
                seed: trial_seed,
                n: r.n,
                m: r.m,
                connected: g.is_connected(),
                is_ah: r.is_ah,
                bound_mad: r.bound_mad,
                bound_delta: r.bound_delta,
                bound_brooks: r.bound_brooks,
                bound_soto: r.bound_soto,
                lower_clique: r.lower_clique,
                degeneracy_plus_one: r.degeneracy + 1,
                greedy_colors: r.greedy_colors,
                exact_chromatic: r.exact_chromatic,
            };
            check_row(&row)?;
            Ok(row)
        })
        .collect()
}

fn check_row(row: &ExperimentRow) -> Result<()> {
    let fail = |detail: String| {
        Err(Error::BoundViolation {
            trial: row.trial,
            detail,
        })
    };
    if row.bound_mad > row.bound_delta {
        return fail(format!(
            "floor(MAD+1) = {} > Δ+1 = {}",
            row.bound_mad, row.bound_delta
        ));
    }
    if let (true, Some(soto)) = (row.connected, row.bound_soto) {
        if row.bound_mad > soto {
            return fail(format!(
                "floor(MAD+1) = {} > Soto bound {soto}",
                row.bound_mad
            ));
        }
    }
    if let Some(chi) = row.exact_chromatic {
        if chi > row.bound_mad {
            return fail(format!("χ = {chi} > floor(MAD+1) = {}", row.bound_mad));
        }
    }
    Ok(())
}
