//! Batch front end for `gdterwilliger`: analysis reports, oracle
//! verification, grid sweeps and matrix dumps.

pub mod analysis;
pub mod check;
pub mod dump;
pub mod error;
pub mod json;
pub mod sweep;

pub use analysis::{analyze, AnalysisReport, Format};
pub use error::{CliError, CliResult};
