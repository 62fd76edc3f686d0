//! Request and response documents.
//!
//! All integer and rational values travel as strings ("17", "-3", "1/2") so
//! payloads stay exact at arbitrary precision; counts and degrees are plain
//! JSON numbers.  Unknown fields are rejected so every accepted document
//! conforms to the published schemas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use krtorus::zlinalg::{FgAbelianGroup, IntMatrix};

use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

// ---------------------------------------------------------------------------
// requests

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyRequest {
    pub schema_version: String,
    /// matrix of the linear part, rows of integer strings
    pub sigma: Vec<Vec<String>>,
    /// translation lift, rational strings
    pub t: Vec<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub generators: usize,
    /// rows of integer strings; one row per generator, one column per relation
    pub relations: Vec<Vec<String>>,
    pub sigma: Vec<Vec<String>>,
    #[serde(default)]
    pub sign_twist: bool,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientKind {
    #[default]
    Module,
    Torus,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyRequest {
    pub schema_version: String,
    pub module: ModuleSpec,
    pub degree: usize,
    #[serde(default)]
    pub coefficients: CoefficientKind,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AffineGerbesRequest {
    pub schema_version: String,
    pub sigma: Vec<Vec<String>>,
    pub t: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TwistSpec {
    pub e: u8,
    pub mu: u8,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum GerbeSpec {
    /// the string "trivial"
    Preset(String),
    Detailed {
        #[serde(default)]
        point_twist: Option<TwistSpec>,
        /// one (s0, s1) pair per cyclotomic (T3/T4) factor, overriding the
        /// signatures implied by the factor types
        #[serde(default)]
        signatures: Option<Vec<[u8; 2]>>,
    },
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifiedPairRequest {
    pub schema_version: String,
    /// factor types "T1".."T5"
    pub factors: Vec<String>,
    #[serde(default)]
    pub gerbe: Option<GerbeSpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct KrGroupsRequest {
    pub schema_version: String,
    pub factors: Vec<String>,
    #[serde(default)]
    pub twist: Option<TwistSpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct IndexRequest {
    pub schema_version: String,
    pub n: u32,
    pub k: u32,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct JacobianShiftRequest {
    pub schema_version: String,
    pub n: u32,
    pub k: u32,
    #[serde(default)]
    pub b_plus: u32,
    #[serde(default)]
    pub b_minus: u32,
    #[serde(default)]
    pub fixed_point_free: bool,
}

// ---------------------------------------------------------------------------
// responses

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub display: String,
}

impl GroupDoc {
    pub fn from_group(g: &FgAbelianGroup) -> Self {
        Self {
            free_rank: g.free_rank(),
            torsion: g.torsion().iter().map(|t| t.to_string()).collect(),
            display: g.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsDoc {
    pub a: usize,
    pub b: usize,
    pub r: usize,
    pub chern_nonzero: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyResult {
    pub invariants: InvariantsDoc,
    pub factors: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyResult {
    pub group: GroupDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentativeDoc {
    pub lambda: Vec<String>,
    pub u: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorClassesDoc {
    pub factor: String,
    pub case: u8,
    pub group: GroupDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineGerbesResult {
    /// classes of the whole torus, from the affine-function coefficients
    pub group: GroupDoc,
    pub representatives: Vec<RepresentativeDoc>,
    /// factorwise case tags and class groups
    pub factors: Vec<FactorClassesDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateDoc {
    pub point_twist: TwistSpec,
    pub signatures: Vec<[u8; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualizeResult {
    pub source_factors: Vec<String>,
    pub source_residual_twist: TwistSpec,
    pub target_factors: Vec<String>,
    pub target_chern_nonzero: bool,
    pub candidates: Vec<CandidateDoc>,
    pub fiber_dim: usize,
    pub minus_summands: usize,
    /// degree-map offset per candidate
    pub degree_offsets: Vec<u8>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeGroupDoc {
    pub j: u8,
    pub group: GroupDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KrGroupsResult {
    pub supported: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<DegreeGroupDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_free_count: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FmDegreeRowDoc {
    pub j: u8,
    pub source: GroupDoc,
    pub target_degree: u8,
    pub target: GroupDoc,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FmCandidateDoc {
    pub candidate: usize,
    pub degree_offset: u8,
    pub pass: bool,
    pub free_rank_preserved: bool,
    pub degrees: Vec<FmDegreeRowDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FmVerifyResult {
    pub pass: bool,
    pub source_factors: Vec<String>,
    pub target_factors: Vec<String>,
    pub candidates: Vec<FmCandidateDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndexResult {
    pub verdict: String,
    pub mod2: bool,
    pub lift_degree: u8,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JacobianShiftResult {
    pub albanese_push: u8,
    pub fm_shift: u8,
    pub ind_degree: u8,
}

/// Top-level response envelope: the schema version, the command, the parsed
/// request echoed back, and the command result.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Response<I, R> {
    pub schema_version: String,
    pub command: String,
    pub input: I,
    pub result: R,
}

impl<I: Serialize, R: Serialize> Response<I, R> {
    pub fn new(command: &str, input: I, result: R) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            input,
            result,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pointer: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorResponse {
    pub schema_version: String,
    pub error: ErrorBody,
}

// ---------------------------------------------------------------------------
// exact-value parsing

pub fn parse_bigint(s: &str, pointer: &str) -> Result<BigInt, CliError> {
    s.parse::<BigInt>()
        .map_err(|_| CliError::schema_at(format!("not an integer string: {s:?}"), pointer))
}

pub fn parse_rational(s: &str, pointer: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::schema_at(format!("not a rational string: {s:?}"), pointer);
    match s.split_once('/') {
        None => Ok(BigRational::from(parse_bigint(s, pointer)?)),
        Some((num, den)) => {
            let n = num.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = den.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

pub fn parse_matrix(rows: &[Vec<String>], field: &str) -> Result<IntMatrix, CliError> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut entries = Vec::with_capacity(nrows * ncols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(CliError::schema_at(
                format!("ragged matrix: row {i} has {} entries, expected {ncols}", row.len()),
                &format!("/{field}/{i}"),
            ));
        }
        for (j, s) in row.iter().enumerate() {
            entries.push(parse_bigint(s, &format!("/{field}/{i}/{j}"))?);
        }
    }
    IntMatrix::new(nrows, ncols, entries)
        .map_err(|e| CliError::schema_at(e.to_string(), &format!("/{field}")))
}

pub fn parse_rational_vec(values: &[String], field: &str) -> Result<Vec<BigRational>, CliError> {
    values
        .iter()
        .enumerate()
        .map(|(i, s)| parse_rational(s, &format!("/{field}/{i}")))
        .collect()
}
