use serde::{Deserialize, Serialize};

use cslcolour::coincidence::{concordance, is_colour_coincidence, Census, Verdict};
use cslcolour::ratmat::format_rational;
use cslcolour::{analyze, window_census, ColouringAnalysis, Lattice, RatMatrix, Rational};

use crate::config::{Job, JobConfig};
use crate::error::CliError;

pub const TOOL: &str = "cslcolour";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub tool: String,
    pub version: String,
    pub config: JobConfig,
    pub m: u64,
    pub sigma1: u64,
    pub sigma2: u64,
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
    pub colour_coincidence: bool,
    /// Ordered `[colour, image colour]` pairs, present for colour coincidences.
    pub permutation: Option<Vec<(usize, usize)>>,
    pub set_i: Vec<usize>,
    pub set_j: Vec<usize>,
    /// Coset representative of each colour, in colour order.
    pub reps: Vec<Vec<String>>,
    /// Canonical basis of `Γ₁ ∩ AΓ₁`.
    pub csl_basis: Vec<Vec<String>>,
    /// Canonical basis of `Γ₁ ∩ A⁻¹Γ₁`.
    pub csl_inv_basis: Vec<Vec<String>>,
    /// Canonical basis of `Γ₂ ∩ AΓ₂`.
    pub csl2_basis: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusSection {
    pub radius: u64,
    pub points: u64,
    pub csl_inv_points: u64,
    pub csl_points: u64,
    pub observed_i: Vec<usize>,
    pub observed_j: Vec<usize>,
    pub transfer: Vec<TransferCount>,
    /// `agrees`, `inconclusive` or `contradicts`.
    pub verdict: String,
    pub verdict_detail: Option<String>,
    /// Whether `A⁻¹` and `A∘A` are colour coincidences too. Recorded only.
    pub inverse_is_colour_coincidence: bool,
    pub square_is_colour_coincidence: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransferCount {
    pub from: usize,
    pub to: usize,
    pub count: u64,
}

pub fn vector_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn matrix_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    m.rows().map(vector_strings).collect()
}

fn basis_strings(l: &Lattice) -> Vec<Vec<String>> {
    matrix_strings(l.basis())
}

impl AnalysisReport {
    pub fn new(job: &Job, analysis: &ColouringAnalysis) -> Self {
        AnalysisReport {
            tool: TOOL.into(),
            version: VERSION.into(),
            config: job.config.clone(),
            m: analysis.m,
            sigma1: analysis.sigma1,
            sigma2: analysis.sigma2,
            s: analysis.s,
            t: analysis.t,
            u: analysis.u,
            v: analysis.v,
            colour_coincidence: analysis.colour_coincidence,
            permutation: analysis.permutation.clone(),
            set_i: analysis.set_i.clone(),
            set_j: analysis.set_j.clone(),
            reps: job.colouring.reps().iter().map(|r| vector_strings(r)).collect(),
            csl_basis: basis_strings(&analysis.csl1),
            csl_inv_basis: basis_strings(&analysis.csl1_inv),
            csl2_basis: basis_strings(&analysis.csl2),
            census: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(format!("invalid report: {e}")))
    }
}

impl CensusSection {
    pub fn new(census: &Census, verdict: &Verdict, inverse_cc: bool, square_cc: bool) -> Self {
        let (verdict, verdict_detail) = match verdict {
            Verdict::Agrees => ("agrees", None),
            Verdict::Inconclusive(why) => ("inconclusive", Some(why.clone())),
            Verdict::Contradicts(why) => ("contradicts", Some(why.clone())),
        };
        CensusSection {
            radius: census.radius,
            points: census.points,
            csl_inv_points: census.csl_inv_points,
            csl_points: census.csl_points,
            observed_i: census.observed_i.clone(),
            observed_j: census.observed_j.clone(),
            transfer: census
                .transfer
                .iter()
                .map(|(&(from, to), &count)| TransferCount { from, to, count })
                .collect(),
            verdict: verdict.into(),
            verdict_detail,
            inverse_is_colour_coincidence: inverse_cc,
            square_is_colour_coincidence: square_cc,
        }
    }
}

/// The `analyze` command.
pub fn analyze_job(job: &Job) -> Result<AnalysisReport, CliError> {
    let analysis = analyze(&job.colouring, &job.map)?;
    Ok(AnalysisReport::new(job, &analysis))
}

/// The `oracle` command: the analysis report with its census section filled
/// in. A contradicting census still yields the report, alongside the error.
pub fn oracle_job(job: &Job) -> Result<(AnalysisReport, Option<CliError>), CliError> {
    let radius = job
        .config
        .oracle_radius
        .ok_or_else(|| CliError::Config("oracle_radius is required for the oracle command".into()))?;
    if radius == 0 {
        return Err(CliError::Config("oracle_radius must be at least 1".into()));
    }
    let analysis = analyze(&job.colouring, &job.map)?;
    let census = window_census(&job.colouring, &job.map, radius)?;
    let verdict = concordance(&analysis, &census);
    let inverse_cc = is_colour_coincidence(&job.colouring, &job.map.inverse())?;
    let square = job.map.compose(&job.map)?;
    let square_cc = is_colour_coincidence(&job.colouring, &square)?;
    let mut report = AnalysisReport::new(job, &analysis);
    report.census = Some(CensusSection::new(&census, &verdict, inverse_cc, square_cc));
    let failure = match verdict {
        Verdict::Contradicts(why) => Some(CliError::Contradiction(why)),
        _ => None,
    };
    Ok((report, failure))
}
