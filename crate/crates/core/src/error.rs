use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degree overflow: degree {degree} exceeds dimension {dim}")]
    DegreeOverflow { degree: usize, dim: usize },
    #[error("degree underflow: cannot contract a 0-form")]
    DegreeUnderflow,
    #[error("invalid multi-index {index:?} for dimension {dim}")]
    InvalidIndex { index: Vec<usize>, dim: usize },
    #[error("metric is not positive definite")]
    DegenerateMetric,
    #[error("form is degenerate")]
    NotNondegenerate,
    #[error("bilinear form has indefinite signature ({positive}, {negative})")]
    IndefiniteSignature { positive: usize, negative: usize },
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("unsupported subspace dimension {0}")]
    BadDimension(usize),
    #[error("triple is not admissible: {0}")]
    NotAdmissibleTriple(String),
    #[error("tuple is not admissible: {0}")]
    NotAdmissibleTuple(String),
    #[error("vector is not a unit vector (norm {0})")]
    NotUnit(f64),
    #[error("calibration vanishes on the given frame (value {0:e})")]
    CalibrationVanishes(f64),
    #[error("determinant ratios are inconsistent (relative spread {spread:e}); not a Cayley form")]
    RatioInconsistent { spread: f64 },
    #[error("compatibility certification failed (residual {residual:e})")]
    CompatibilityFailed { residual: f64 },
    #[error("2-form is not in the 7-dimensional component (residual {residual:e})")]
    NotInLambda27 { residual: f64 },
    #[error("invalid SU(3)-structure: {0}")]
    InvalidSU3(String),
    #[error("invalid SU(4)-structure: {0}")]
    InvalidSU4(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::DegreeOverflow { .. } => "DegreeOverflow",
            Error::DegreeUnderflow => "DegreeUnderflow",
            Error::InvalidIndex { .. } => "InvalidIndex",
            Error::DegenerateMetric => "DegenerateMetric",
            Error::NotNondegenerate => "NotNondegenerate",
            Error::IndefiniteSignature { .. } => "IndefiniteSignature",
            Error::DependentBasis => "DependentBasis",
            Error::BadDimension(_) => "BadDimension",
            Error::NotAdmissibleTriple(_) => "NotAdmissibleTriple",
            Error::NotAdmissibleTuple(_) => "NotAdmissibleTuple",
            Error::NotUnit(_) => "NotUnit",
            Error::CalibrationVanishes(_) => "CalibrationVanishes",
            Error::RatioInconsistent { .. } => "RatioInconsistent",
            Error::CompatibilityFailed { .. } => "CompatibilityFailed",
            Error::NotInLambda27 { .. } => "NotInLambda27",
            Error::InvalidSU3(_) => "InvalidSU3",
            Error::InvalidSU4(_) => "InvalidSU4",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
