use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("(1-u)^{power} does not divide {poly}: only (1-u)^{achieved} does")]
    NotDivisible { power: u32, achieved: u32, poly: String },

    #[error("index {requested} exceeds the truncation order {order}")]
    OrderExceeded { requested: usize, order: usize },

    #[error("unsupported affine type {0:?}")]
    UnsupportedType(String),

    #[error("word is not reduced at index {index}: {detail}")]
    NotReduced { index: i64, detail: String },

    #[error("lambda + rho is not regular dominant: {0}")]
    NotRegularDominant(String),

    #[error("classical sum at t^{degree} did not stabilize (height cap {cap})")]
    NotStabilized { degree: usize, cap: u32 },

    #[error("truncation profiles differ: {0} vs {1}")]
    ProfileMismatch(String, String),

    #[error("series has non-unit constant term")]
    NonUnitConstant,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("{what} disagree at {at}: {lhs} vs {rhs}")]
    Mismatch {
        what: &'static str,
        at: String,
        lhs: String,
        rhs: String,
    },

    #[error("invalid argument: {0}")]
    Invalid(String),
}
