//! Job configuration files.
//!
//! Rationals are strings `"p/q"` or `"p"`, matrices are row-major arrays of
//! rows. Basis matrices hold generators as rows. A matrix map acts on points
//! as `v ↦ A·v`; a `{"coeffs": [..]}` map is multiplication by an element of
//! `Z[ξ₈]` on coefficient vectors `(a₀, a₁, a₂, a₃)`.

use serde::{Deserialize, Serialize};

use cslcolour::ratmat::parse_rational;
use cslcolour::{Colouring, CommensurableMap, Cyc8, Lattice, Matrix, RatMatrix, Rational};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub dim: usize,
    pub parent_basis: Vec<Vec<String>>,
    pub sub_basis: Vec<Vec<String>>,
    pub map: MapSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reps: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub render: Option<RenderSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_radius: Option<u64>,
    /// Require the map to be a genuine isometry of the ambient space: an
    /// orthogonal matrix, or a unit-modulus element for `Z[ξ₈]` maps.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub standard_embedding: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapSpec {
    Matrix(Vec<Vec<String>>),
    Cyc8 { coeffs: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RenderSpec {
    pub radius: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub palette: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub highlight_csl: bool,
}

/// How points are placed in the drawing plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Embedding {
    /// Points of `Q²` drawn as they are.
    Plane,
    /// Coefficient vectors of `Z[ξ₈]` drawn through the star map.
    Cyc8Star,
    /// No planar picture available.
    Unsupported,
}

/// A validated job, ready for the library.
#[derive(Clone, Debug)]
pub struct Job {
    pub config: JobConfig,
    pub colouring: Colouring,
    pub map: CommensurableMap,
    pub embedding: Embedding,
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(format!("invalid config: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes") + "\n"
    }
}

fn parse_vector(row: &[String], dim: usize, what: &str) -> Result<Vec<Rational>, CliError> {
    if row.len() != dim {
        return Err(CliError::Config(format!("{what}: expected {dim} entries, found {}", row.len())));
    }
    row.iter().map(|s| parse_rational(s).map_err(CliError::from)).collect()
}

fn parse_square(rows: &[Vec<String>], dim: usize, what: &str) -> Result<RatMatrix, CliError> {
    if rows.len() != dim {
        return Err(CliError::Config(format!("{what}: expected {dim} rows, found {}", rows.len())));
    }
    let rows = rows.iter().map(|r| parse_vector(r, dim, what)).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows)?)
}

impl Job {
    pub fn from_config(config: JobConfig) -> Result<Self, CliError> {
        let dim = config.dim;
        if dim == 0 {
            return Err(CliError::Config("dim must be positive".into()));
        }
        let parent = Lattice::new(&parse_square(&config.parent_basis, dim, "parent_basis")?)?;
        let sub = Lattice::new(&parse_square(&config.sub_basis, dim, "sub_basis")?)?;
        let colouring = match &config.reps {
            Some(reps) => {
                let reps = reps.iter().map(|r| parse_vector(r, dim, "reps")).collect::<Result<Vec<_>, _>>()?;
                Colouring::with_reps(parent, sub, reps)?
            }
            None => Colouring::new(parent, sub)?,
        };
        let (map, embedding) = match &config.map {
            MapSpec::Matrix(rows) => {
                let m = parse_square(rows, dim, "map")?;
                let map = CommensurableMap::isometry(m, config.standard_embedding)?;
                (map, if dim == 2 { Embedding::Plane } else { Embedding::Unsupported })
            }
            MapSpec::Cyc8 { coeffs } => {
                if dim != 4 {
                    return Err(CliError::Config(format!("a Z[ξ₈] map needs dim 4, not {dim}")));
                }
                if coeffs.len() != 4 {
                    return Err(CliError::Config(format!("map.coeffs: expected 4 entries, found {}", coeffs.len())));
                }
                let z = Cyc8::parse(coeffs)?;
                let map = z.multiplication_map()?;
                if !map.has_unit_determinant() || (config.standard_embedding && !z.is_unit_modulus()) {
                    return Err(cslcolour::Error::NotCoincidence.into());
                }
                (map, Embedding::Cyc8Star)
            }
        };
        if let Some(render) = &config.render {
            if let Some(palette) = &render.palette {
                if let Some(bad) = palette.iter().find(|c| !is_hex_colour(c)) {
                    return Err(CliError::Config(format!("render.palette: {bad:?} is not a #rrggbb colour")));
                }
                if palette.len() < colouring.m() {
                    return Err(CliError::Config(format!(
                        "render.palette: {} colours for {} cosets",
                        palette.len(),
                        colouring.m()
                    )));
                }
            }
        }
        Ok(Job { config, colouring, map, embedding })
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Job::from_config(JobConfig::from_json(text)?)
    }
}

fn is_hex_colour(s: &str) -> bool {
    s.strip_prefix('#').is_some_and(|h| h.len() == 6 && h.bytes().all(|b| b.is_ascii_hexdigit()))
}
