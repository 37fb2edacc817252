//! Command-line front end for `cslcolour`: JSON job configs in, JSON reports
//! and SVG figures out. The binary is a thin wrapper over these functions.

pub mod config;
pub mod error;
pub mod render;
pub mod report;

use serde::Serialize;

use cslcolour::coincidence::enumerate_square_rotations;

pub use config::{Job, JobConfig};
pub use error::CliError;
pub use render::{render_job, Mode};
pub use report::{analyze_job, oracle_job, AnalysisReport};

/// Reserved for randomized checks; no current code path reads it.
pub const SEED_ENV: &str = "CSLCOLOUR_SEED";

#[derive(Serialize)]
struct RotationList {
    tool: &'static str,
    version: &'static str,
    max_den: u64,
    count: usize,
    rotations: Vec<Vec<Vec<String>>>,
}

/// The coincidence rotations of `Z²` with denominator at most `max_den`.
pub fn rotations_json(max_den: u64) -> Result<String, CliError> {
    if max_den == 0 {
        return Err(CliError::Config("--max must be at least 1".into()));
    }
    let rotations: Vec<_> =
        enumerate_square_rotations(max_den).iter().map(|r| report::matrix_strings(r.matrix())).collect();
    let list = RotationList {
        tool: report::TOOL,
        version: report::VERSION,
        max_den,
        count: rotations.len(),
        rotations,
    };
    Ok(serde_json::to_string_pretty(&list).expect("rotation list serializes") + "\n")
}

pub fn read_job(path: &std::path::Path) -> Result<Job, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Job::from_json(&text)
}
