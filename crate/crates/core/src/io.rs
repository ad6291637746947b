//! Text formats: DIMACS graphs (`p edge`), plain edge lists, DIMACS CNF,
//! and bounds reports as JSON, CSV or an aligned table.
//!
//! Writers are canonical: equal inputs give byte-identical output.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bounds::BoundsReport;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduction::{CnfFormula, Literal};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} {tok:?}")))
}

/// Reads either DIMACS (first content line starts with `p`) or a plain
/// 0-indexed `u v` edge list.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match content_lines(text).next() {
        Some((_, l)) if l.starts_with('p') => parse_dimacs_graph(text),
        _ => parse_edge_list(text),
    }
}

/// DIMACS coloring format: `c` comments, one `p edge N M` line, then `M`
/// lines `e u v` with 1-indexed vertices.
pub fn parse_dimacs_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (line, l) in content_lines(text) {
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line, "second problem line"));
                }
                match toks.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(Error::parse(line, format!("unsupported format {other:?}")))
                    }
                }
                let n = parse_num(line, toks.next(), "vertex count")?;
                let m = parse_num(line, toks.next(), "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) =
                    header.ok_or_else(|| Error::parse(line, "edge before problem line"))?;
                let u: usize = parse_num(line, toks.next(), "endpoint")?;
                let v: usize = parse_num(line, toks.next(), "endpoint")?;
                for x in [u, v] {
                    if x == 0 {
                        return Err(Error::parse(line, "vertex ids are 1-indexed"));
                    }
                    if x > n {
                        return Err(Error::VertexOutOfRange { vertex: x, n });
                    }
                }
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::DuplicateEdge(u, v));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(Error::parse(line, format!("unexpected line {l:?}"))),
        }
        if toks.next().is_some() {
            return Err(Error::parse(line, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if edges.len() != m {
        return Err(Error::CountMismatch {
            what: "edges",
            expected: m,
            found: edges.len(),
        });
    }
    Graph::new(n, &edges)
}

/// Whitespace-separated `u v` pairs, 0-indexed; the vertex count is one
/// more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (line, l) in content_lines(text) {
        let mut toks = l.split_whitespace();
        let u: usize = parse_num(line, toks.next(), "endpoint")?;
        let v: usize = parse_num(line, toks.next(), "endpoint")?;
        if toks.next().is_some() {
            return Err(Error::parse(line, "trailing tokens"));
        }
        edges.push((u, v));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::new(n, &edges)
}

pub fn write_dimacs_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

/// DIMACS CNF: `c` comments, `p cnf V C`, then literals terminated by `0`
/// (clauses may span lines). A `%` line ends the input. Every clause must
/// have exactly three literals.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (line, l) in content_lines(text) {
        last_line = line;
        if l.starts_with('%') {
            break;
        }
        let mut toks = l.split_whitespace().peekable();
        if toks.peek() == Some(&"p") {
            toks.next();
            if header.is_some() {
                return Err(Error::parse(line, "second problem line"));
            }
            if toks.next() != Some("cnf") {
                return Err(Error::parse(line, "expected `p cnf V C`"));
            }
            let v = parse_num(line, toks.next(), "variable count")?;
            let c = parse_num(line, toks.next(), "clause count")?;
            if toks.next().is_some() {
                return Err(Error::parse(line, "trailing tokens"));
            }
            header = Some((v, c));
            continue;
        }
        let (num_vars, _) =
            header.ok_or_else(|| Error::parse(line, "clause before problem line"))?;
        for tok in toks {
            let x: i64 = parse_num(line, Some(tok), "literal")?;
            match Literal::from_dimacs(x) {
                None => {
                    if current.len() != 3 {
                        return Err(Error::NotThreeCnf {
                            clause: clauses.len() + 1,
                            len: current.len(),
                        });
                    }
                    clauses.push([current[0], current[1], current[2]]);
                    current.clear();
                }
                Some(lit) if lit.var() > num_vars => {
                    return Err(Error::parse(
                        line,
                        format!("literal {x} exceeds declared {num_vars} variables"),
                    ));
                }
                Some(lit) => current.push(lit),
            }
        }
    }
    let (num_vars, num_clauses) = header.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if !current.is_empty() {
        return Err(Error::parse(
            last_line,
            "last clause is not terminated by 0",
        ));
    }
    if clauses.len() != num_clauses {
        return Err(Error::CountMismatch {
            what: "clauses",
            expected: num_clauses,
            found: clauses.len(),
        });
    }
    CnfFormula::new(num_vars, clauses).map_err(|e| Error::parse(0, e.to_string()))
}

pub fn write_dimacs_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for [a, b, c] in f.clauses() {
        writeln!(out, "{a} {b} {c} 0").expect("writing to a String");
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    /// Header line plus one data row.
    Csv,
    Table,
}

/// Renders a report. JSON is compact with keys in declaration order and
/// absent values as `null`; CSV leaves absent values empty.
pub fn serialize_report(r: &BoundsReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string(r).expect("report serializes"),
        ReportFormat::Csv => to_csv(std::slice::from_ref(r)),
        ReportFormat::Table => report_table(r),
    }
}

/// Serializes rows with a header line.
pub fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory CSV write");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("CSV is UTF-8")
}

pub fn from_csv<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .enumerate()
        .map(|(i, row)| row.map_err(|e| Error::parse(i + 2, e.to_string())))
        .collect()
}

fn report_table(r: &BoundsReport) -> String {
    let opt = |v: Option<usize>, absent: &str| v.map_or(absent.to_string(), |x| x.to_string());
    let rows = [
        ("vertices", r.n.to_string()),
        ("edges", r.m.to_string()),
        ("average degree", r.avg_degree.to_string()),
        ("MAD", r.mad_value.to_string()),
        ("average hereditary", r.is_ah.to_string()),
        ("floor(MAD + 1)", r.bound_mad.to_string()),
        ("max degree + 1", r.bound_delta.to_string()),
        ("Brooks", opt(r.bound_brooks, "-")),
        (
            "Soto-Rossi-Sevaux",
            opt(r.bound_soto, "- (precondition unmet: disconnected)"),
        ),
        ("clique lower bound", r.lower_clique.to_string()),
        ("exact case", opt(r.exact_case, "-")),
        ("degeneracy", r.degeneracy.to_string()),
        ("greedy colors", r.greedy_colors.to_string()),
        ("chromatic number", opt(r.exact_chromatic, "not computed")),
    ];
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

/// Where a report came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub input: Option<String>,
    pub tool_version: String,
    pub seed: Option<u64>,
}

/// A report plus provenance. Serializes as the report's JSON object with an
/// extra trailing `provenance` key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    #[serde(flatten)]
    pub report: BoundsReport,
    pub provenance: Provenance,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }
}
