//! Exact maximum-average-degree computation, average-hereditary checks,
//! chromatic-number bounds and the 3-SAT to 3-coloring graph construction.
//!
//! All densities are carried as exact [`Fraction`]s. Floating point only
//! appears in the G(n, p) generator's coin flips.

pub mod bounds;
pub mod coloring;
pub mod density;
pub mod error;
pub mod experiment;
pub mod flow;
pub mod fraction;
pub mod generators;
pub mod graph;
pub mod io;
pub mod reduction;

pub use bounds::BoundsReport;
pub use coloring::{Coloring, DegeneracyOrder};
pub use density::{AhVerdict, DensestResult};
pub use error::{Error, Result};
pub use flow::{CutResult, FlowNetwork};
pub use fraction::Fraction;
pub use graph::{DegreeStats, Graph};
pub use reduction::{CnfFormula, KarpGraph, Literal, VertexRole};

/// Crate version, reported by the CLI and recorded in report provenance.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
