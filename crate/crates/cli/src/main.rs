use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use avghered_core::bounds::bounds_report;
use avghered_core::coloring::{degeneracy_coloring, exact_chromatic, DEFAULT_EXACT_LIMIT};
use avghered_core::density::{densest_subgraph, is_average_hereditary};
use avghered_core::experiment::{run_compare, Family};
use avghered_core::io::{self, Provenance, ReportDocument, ReportFormat};
use avghered_core::{generators, reduction, Graph};

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: avghered_core::Error,
    },
    #[error(transparent)]
    Core(#[from] avghered_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Input { source, .. } if source.is_input_error() => 1,
            CliError::Input { .. } | CliError::Core(_) => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "avghered",
    version = concat!(env!("CARGO_PKG_VERSION"), " (formats v1)"),
    about = "Maximum average degree, average-hereditary checks and chromatic bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum average degree and a densest subgraph.
    Mad { graph: PathBuf },
    /// Decide whether the graph is average hereditary.
    CheckAh { graph: PathBuf },
    /// Every chromatic bound for the graph.
    Bounds {
        graph: PathBuf,
        /// Also compute the exact chromatic number.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Smallest-last greedy coloring.
    Color {
        graph: PathBuf,
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
    /// Build the 3-coloring instance of a 3-CNF formula.
    Reduce {
        cnf: PathBuf,
        /// Output graph; metadata goes to `<output>.meta.json`. Without it
        /// the graph goes to stdout and metadata to stderr.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a random instance.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare bounds over many random instances; writes CSV.
    Compare {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Tree,
    Regular,
    Gnp,
    CliquePath,
    /// Karp graph of a random 3-CNF.
    Karp,
    /// A random 3-CNF formula (gen only).
    Cnf,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: FamilyKind,
    /// Vertex count (tree, regular, gnp).
    #[arg(long)]
    n: Option<usize>,
    /// Degree (regular).
    #[arg(long)]
    k: Option<usize>,
    /// Edge probability (gnp).
    #[arg(long)]
    p: Option<f64>,
    /// Clique size (clique-path).
    #[arg(long)]
    a: Option<usize>,
    /// Path length (clique-path).
    #[arg(long)]
    b: Option<usize>,
    /// Variable count (karp, cnf).
    #[arg(long)]
    vars: Option<usize>,
    /// Clause count (karp, cnf).
    #[arg(long)]
    clauses: Option<usize>,
}

fn need<T>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| avghered_core::Error::BadParams(format!("missing --{name}")).into())
}

impl FamilyArgs {
    fn family(&self) -> Result<Family> {
        Ok(match self.family {
            FamilyKind::Tree => Family::Tree {
                n: need(self.n, "n")?,
            },
            FamilyKind::Regular => Family::Regular {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
            },
            FamilyKind::Gnp => Family::Gnp {
                n: need(self.n, "n")?,
                p: need(self.p, "p")?,
            },
            FamilyKind::CliquePath => Family::CliquePath {
                a: need(self.a, "a")?,
                b: need(self.b, "b")?,
            },
            FamilyKind::Karp => Family::Karp {
                vars: need(self.vars, "vars")?,
                clauses: need(self.clauses, "clauses")?,
            },
            FamilyKind::Cnf => {
                return Err(avghered_core::Error::BadParams(
                    "cnf is a formula family, not a graph family".into(),
                )
                .into())
            }
        })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    io::parse_graph(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn join(ids: &[usize]) -> String {
    ids.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Mad { graph } => {
            let g = load_graph(&graph)?;
            let d = densest_subgraph(&g)?;
            println!("mad {}", d.mad);
            println!("density {}", d.density);
            println!("subgraph {}", join(&d.subgraph_vertices));
        }
        Command::CheckAh { graph } => {
            let g = load_graph(&graph)?;
            let verdict = is_average_hereditary(&g)?;
            println!("average_hereditary {}", verdict.is_ah);
            println!("avg_degree {}", g.average_degree());
            match verdict.witness {
                Some(w) => {
                    println!("mad {}", w.mad);
                    println!("witness {}", join(&w.subgraph_vertices));
                }
                None => println!("mad {}", g.average_degree()),
            }
        }
        Command::Bounds {
            graph,
            exact,
            limit,
            json,
            csv,
        } => {
            let g = load_graph(&graph)?;
            let report = bounds_report(&g, exact, limit)?;
            if json {
                let doc = ReportDocument {
                    report,
                    provenance: Provenance {
                        input: Some(graph.display().to_string()),
                        tool_version: avghered_core::VERSION.to_string(),
                        seed: None,
                    },
                };
                println!("{}", doc.to_json());
            } else if csv {
                print!("{}", io::serialize_report(&report, ReportFormat::Csv));
            } else {
                print!("{}", io::serialize_report(&report, ReportFormat::Table));
            }
        }
        Command::Color {
            graph,
            exact,
            limit,
        } => {
            let g = load_graph(&graph)?;
            if g.n() == 0 {
                println!("colors 0");
                return Ok(());
            }
            let (order, coloring) = degeneracy_coloring(&g)?;
            println!("degeneracy {}", order.degeneracy);
            println!("colors {}", coloring.num_colors);
            println!("coloring {}", join(&coloring.colors));
            if exact {
                println!("chromatic_number {}", exact_chromatic(&g, limit)?);
            }
        }
        Command::Reduce { cnf, output } => {
            let formula = io::parse_dimacs_cnf(&read(&cnf)?).map_err(|source| CliError::Input {
                path: cnf.clone(),
                source,
            })?;
            let (karp, summary) = reduction::reduce(&formula)?;
            let graph_text = io::write_dimacs_graph(&karp.graph);
            let meta = serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n";
            match output {
                Some(path) => {
                    write(&path, &graph_text)?;
                    let mut meta_path = path.into_os_string();
                    meta_path.push(".meta.json");
                    write(Path::new(&meta_path), &meta)?;
                }
                None => {
                    print!("{graph_text}");
                    eprint!("{meta}");
                }
            }
        }
        Command::Gen {
            family,
            seed,
            output,
        } => {
            let text = if let FamilyKind::Cnf = family.family {
                let f = generators::random_3cnf(
                    need(family.vars, "vars")?,
                    need(family.clauses, "clauses")?,
                    seed,
                )?;
                io::write_dimacs_cnf(&f)
            } else {
                io::write_dimacs_graph(&family.family()?.generate(seed)?)
            };
            emit(output.as_deref(), &text)?;
        }
        Command::Compare {
            family,
            trials,
            seed,
            output,
            exact,
            limit,
        } => {
            let family = family.family()?;
            let rows = run_compare(family, trials, seed, exact.then_some(limit))?;
            emit(output.as_deref(), &io::to_csv(&rows))?;
            eprintln!("{family}: {} trials, bound checks passed", rows.len());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
