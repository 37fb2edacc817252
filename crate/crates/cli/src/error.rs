use serde::Serialize;
use thiserror::Error;

/// Everything that ends a CLI run early. Each variant maps to one exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    UnsupportedDimension(String),
    #[error(transparent)]
    Core(#[from] cslcolour::Error),
    #[error("window census contradicts the lattice analysis: {0}")]
    Contradiction(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: &'a str,
    exit_code: i32,
    message: String,
}

impl CliError {
    /// 0 success, 2 bad input, 3 not a coincidence map, 4 oracle contradiction.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(cslcolour::Error::NotCoincidence) => 3,
            CliError::Core(cslcolour::Error::InternalInvariantViolation(_)) | CliError::Contradiction(_) => 4,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        use cslcolour::Error as E;
        match self {
            CliError::Config(_) => "config",
            CliError::UnsupportedDimension(_) => "unsupported_dimension",
            CliError::Contradiction(_) => "oracle_contradiction",
            CliError::Io { .. } => "io",
            CliError::Core(e) => match e {
                E::NotCoincidence => "not_coincidence",
                E::InternalInvariantViolation(_) => "internal_invariant_violation",
                E::RankDeficient => "rank_deficient",
                E::Singular => "singular",
                E::NotASublattice => "not_a_sublattice",
                E::InvalidReps(_) => "invalid_reps",
                E::ParseRational(_) => "parse_rational",
                E::ZeroElement => "zero_element",
                _ => "invalid_input",
            },
        }
    }

    /// One-line machine-readable form for standard error.
    pub fn to_json(&self) -> String {
        let body = ErrorJson { error: self.kind(), exit_code: self.exit_code(), message: self.to_string() };
        serde_json::to_string(&body).expect("error serializes")
    }
}
