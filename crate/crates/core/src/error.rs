use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("series constant term is not invertible")]
    NonInvertibleConstantTerm,

    #[error("series operands have incompatible variables or truncation: {0}")]
    SeriesMismatch(String),

    #[error("exponent {requested:?} exceeds truncation order {order:?}")]
    BeyondTruncation { requested: Vec<u32>, order: Vec<u32> },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("curve class must be nonzero and effective")]
    ZeroCurveClass,

    #[error("label {0} is not allowed here")]
    UnsupportedLabel(String),

    #[error("brute-force Hurwitz oracle bound exceeded: n = {n} > {bound}")]
    HurwitzBound { n: usize, bound: usize },

    #[error("oracle disagreement: gjv = {gjv}, brute = {brute}")]
    OracleMismatch { gjv: String, brute: String },

    #[error("singular Gram matrix in sector {0}")]
    SingularGram(String),

    #[error("degree-zero coefficient absent for u^{0}")]
    DegreeZeroMissing(u32),

    #[error("missing degree-zero input for: {}", .0.join(", "))]
    MissingDegreeZeroInput(Vec<String>),

    #[error("pivot check failed at step {step}: {claim}")]
    PivotFailure { step: String, claim: String },

    #[error("unknown entry {entry} encountered out of order at step {step}")]
    OutOfOrder { step: String, entry: String },

    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable identifier used in machine-readable error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::NonInvertibleConstantTerm => "non_invertible_constant_term",
            Error::SeriesMismatch(_) => "series_mismatch",
            Error::BeyondTruncation { .. } => "beyond_truncation",
            Error::Parse(_) => "parse",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::SizeMismatch(_) => "size_mismatch",
            Error::OutOfRange(_) => "out_of_range",
            Error::ZeroCurveClass => "zero_curve_class",
            Error::UnsupportedLabel(_) => "unsupported_label",
            Error::HurwitzBound { .. } => "hurwitz_bound",
            Error::OracleMismatch { .. } => "oracle_mismatch",
            Error::SingularGram(_) => "singular_gram",
            Error::DegreeZeroMissing(_) => "degree_zero_missing",
            Error::MissingDegreeZeroInput(_) => "missing_degree_zero_input",
            Error::PivotFailure { .. } => "pivot_failure",
            Error::OutOfOrder { .. } => "out_of_order",
            Error::Input(_) => "input",
        }
    }
}
