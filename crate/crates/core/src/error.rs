use thiserror::Error;

/// Errors surfaced by the library. Diagnostics carry enough context to be
/// actionable from the CLI without a stack trace.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Daubechies order N={0}: supported range is 1..=4")]
    UnsupportedFilterOrder(usize),

    #[error("cascade iteration did not converge: sup-norm residual {residual:.3e} after {iterations} iterations (threshold {threshold:.1e})")]
    CascadeDiverged {
        residual: f64,
        iterations: usize,
        threshold: f64,
    },

    #[error("tabulation depth J={0} too small: need J >= 6")]
    TabulationTooCoarse(u32),

    #[error("region is not adapted: 2^-k R = {reach:.6} must be < dist(K, U^c) = {margin:.6}")]
    NotAdapted { reach: f64, margin: f64 },

    #[error("K is not contained in the domain U")]
    RegionOutsideDomain,

    #[error("invalid level range: n_max = {n_max} < k = {k}")]
    InvalidLevelRange { k: i32, n_max: i32 },

    #[error("level {0} outside the pyramid range")]
    LevelOutOfRange(i32),

    #[error("lattice grids do not match: {0}")]
    GridMismatch(String),

    #[error("exact enumeration limited to 20 edges, got {0}")]
    TooManyEdges(usize),

    #[error("empty sample stream")]
    EmptySampleStream,

    #[error("empty test-function dictionary")]
    EmptyDictionary,

    #[error("scaling fit needs at least 3 usable levels, got {0}")]
    FitUnderdetermined(usize),

    #[error("no bound listed for region `{0}`")]
    MissingRegionBound(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("config error at line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("malformed {what}: {detail}")]
    Format { what: &'static str, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn config(line: usize, msg: impl Into<String>) -> Self {
        Error::Config {
            line,
            message: msg.into(),
        }
    }
}
