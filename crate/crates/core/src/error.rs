use thiserror::Error;

/// Errors raised by the engine. Every variant is a contract violation by the
/// caller or a failed mathematical check; nothing here is retried.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("double factorial undefined for {0} (need k >= -1)")]
    NegativeDoubleFactorial(i64),

    #[error("zero polynomial has no root count")]
    ZeroPolynomial,

    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },

    #[error("expected exactly one root in ({lo}, {hi}), found {count}")]
    RootCount {
        lo: String,
        hi: String,
        count: usize,
    },

    #[error("precision of {0} digits is below the 16-digit floor")]
    PrecisionTooLow(usize),

    #[error("hypersurface dimension n = {0} is below the minimum of {1}")]
    DimensionTooSmall(usize, usize),

    #[error("multiplicities sum to {got}, expected n = {expected}")]
    MultiplicityMismatch { expected: usize, got: usize },

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("value is not exactly representable: {0}")]
    NotExact(String),

    #[error("parameter `{key}` out of range: {reason}")]
    ParameterOutOfRange { key: String, reason: String },

    #[error("missing parameter `{0}`")]
    MissingParameter(String),

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("malformed value for `{key}`: `{value}`")]
    MalformedValue { key: String, value: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("family {family} needs curvature c = {required}, got c = {got}")]
    CurvatureMismatch {
        family: String,
        required: String,
        got: String,
    },

    #[error("variable `{0}` has no derivation rule")]
    MissingRule(String),

    #[error("polynomials belong to different rings")]
    RingMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division is not exact")]
    InexactDivision,

    #[error("repeated rate {0}; collapse equal rates before solving")]
    RepeatedRate(String),

    #[error("rate must be nonzero")]
    ZeroRate,

    #[error("need at least {needed} targets, got {got}")]
    TooFewTargets { needed: usize, got: usize },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("curvature c must be nonzero for this certificate")]
    ZeroCurvature,

    #[error("nonpositive mean curvature H")]
    NonPositiveMeanCurvature,

    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
