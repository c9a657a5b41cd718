use thiserror::Error;

use crate::degree::Tridegree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` cannot be both invertible and square-zero")]
    InvertibleSquareZero(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("monomial has {found} exponents but the presentation has {expected} generators")]
    ArityMismatch { expected: usize, found: usize },
    #[error("exponent {exponent} is illegal for generator `{name}`")]
    IllegalExponent { name: String, exponent: i64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DifferentialError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("page must be at least 2, got {0}")]
    BadPage(i64),
    #[error("image of `{generator}` has a term in degree {found}, expected {expected}")]
    DegreeMismatch {
        generator: String,
        expected: Tridegree,
        found: Tridegree,
    },
    #[error("differential is for page {spec} but the page state is at page {state}")]
    PageMismatch { spec: i64, state: i64 },
    #[error("differentials must be listed in strictly increasing page order")]
    UnsortedPages,
    #[error("tridegree {0} lies outside the window")]
    OutOfWindow(Tridegree),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChartError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("chart failed validation: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("class `{name}` at ({s},{f}) has odd s+f and has no integral motivic weight")]
    OddTotalDegree { name: String, s: i64, f: i64 },
    #[error("stem {s} lies outside the ingested range 0..={s_max}")]
    OutOfRange { s: i64, s_max: i64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("family `{0}` is vertical (zero stem period) and has no slope")]
    Vertical(String),
    #[error("v_0 has the degenerate direction (0,0)")]
    DegenerateDirection,
    #[error("bidegree overflows for n = {n}, k = {k}")]
    Overflow { n: u32, k: i64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RenderError {
    #[error("empty {axis} range {min}..={max}")]
    EmptyRange {
        axis: &'static str,
        min: i64,
        max: i64,
    },
    #[error("scale must be positive")]
    BadScale,
    #[error(transparent)]
    Family(#[from] FamilyError),
}
