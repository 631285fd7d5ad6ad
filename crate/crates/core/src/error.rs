use thiserror::Error;

/// Errors raised by the library. Verification verdicts (an identity that
/// does not hold) are reported as values, never through this type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order {0} is not a prime >= 2")]
    NotPrime(u64),

    #[error("{what} = {value} is outside the allowed range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("[{0}]_q is not a unit: {0} is divisible by the order")]
    NotAUnit(i64),

    #[error("permutation enumeration for n = {n} exceeds the bound n <= {max}")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("cyclotomic orders differ: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid simplicial data: {0}")]
    InvalidSimplicial(String),

    #[error("face identity violated: d_{i} d_{j} != d_{j} d_{} on cell `{cell}`", i + 1)]
    FaceIdentity { i: usize, j: usize, cell: String },

    #[error("subcomplex is not closed under faces: face {face} of `{cell}` is missing")]
    NotFaceClosed { cell: String, face: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("morphism is not a chain map (first failing degree {0})")]
    NotChainMap(i64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// A short stable tag for machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not-prime",
            Error::OutOfRange { .. } => "out-of-range",
            Error::NotAUnit(_) => "not-a-unit",
            Error::EnumerationTooLarge { .. } => "enumeration-too-large",
            Error::OrderMismatch { .. } => "order-mismatch",
            Error::Shape(_) => "shape",
            Error::InvalidSimplicial(_) => "invalid-simplicial",
            Error::FaceIdentity { .. } => "face-identity",
            Error::NotFaceClosed { .. } => "not-face-closed",
            Error::Precondition(_) => "precondition",
            Error::NotChainMap(_) => "not-chain-map",
            Error::Parse(_) => "parse",
        }
    }
}
