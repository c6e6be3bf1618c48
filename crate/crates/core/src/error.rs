use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("could not parse `{0}`")]
    Parse(String),
    #[error("variable spaces differ: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("closedness fails: dF_{i}/dq_{j} != dF_{j}/dq_{i}")]
    NotClosed { i: usize, j: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("lambda = {0} lies in -N; no invariant form exists")]
    NegativeNatural(String),
    #[error("parameter {0} must be real")]
    NonReal(String),
    #[error("skew-adjointness constraints are inconsistent: {0}")]
    InconsistentGram(String),
    #[error("invariant form is not unique up to scale ({0}-dimensional solution space)")]
    GramNotUnique(usize),
    #[error("gram table covers degree {have}, need {need}")]
    InsufficientCoverage { have: u32, need: u32 },
    #[error("operator does not preserve polynomials of degree <= {0}")]
    NotPreserved(u32),
    #[error("casimir is not a scalar matrix")]
    NonScalarCasimir,
    #[error("series truncated at order {have}, need {need}")]
    Truncated { have: usize, need: usize },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
