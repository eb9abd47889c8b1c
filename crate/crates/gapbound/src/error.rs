//! Error type shared by every module, with the process exit code each
//! class of failure maps to on the command line.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    // -- input / syntax (exit code 1) --
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent at byte {pos} is not an integer literal")]
    NonIntegerExponent { pos: usize },
    #[error("invalid configuration: {0}")]
    Config(String),

    // -- precondition rejections (exit code 2) --
    #[error("division by the zero polynomial")]
    DivideByZeroPolynomial,
    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,
    #[error("the zero function is not a valid input here")]
    ZeroFunction,
    #[error("a constant function is not a valid input here")]
    ConstantFunction,
    #[error("the expansion parameter must be nonconstant")]
    ConstantParameter,
    #[error("cluster {cluster} mixes points with different valuations; refine it first")]
    HeterogeneousCluster { cluster: String },
    #[error("invalid place cluster: {0}")]
    InvalidCluster(String),
    #[error("window {order} does not reach past the valuation {valuation}")]
    WindowTooSmall { order: i64, valuation: i64 },
    #[error("series division requires a divisor with a nonzero known coefficient")]
    DivisorNotUnit,
    #[error("series composition requires an inner series vanishing to order >= 1")]
    InnerSeriesNotVanishing,
    #[error("the parameter is not a local parameter at the expansion point (valuation != 1)")]
    NotALocalParameter,
    #[error("the function has valuation {valuation} != 0 at the expansion point; pass --normalize to analyze f/x^v")]
    NotNormalized { valuation: i64 },
    #[error("the function is a polynomial in the expansion parameter; its gap sequence terminates")]
    PolynomialInParameter,
    #[error("the gap sequence has {have} terms but {needed} are required")]
    InsufficientGapTerms { needed: usize, have: usize },

    // -- internal verification failures (exit code 3) --
    #[error("auxiliary function valuation mismatch: expected {expected}, rational route {rational}, series route {series}")]
    ValuationMismatch {
        expected: i64,
        rational: i64,
        series: i64,
    },
    #[error("cluster {cluster} matches no case of the height decomposition")]
    PartitionGap { cluster: String },
    #[error("corollary weight #Supp + 2g - 2 is negative")]
    NegativeWeight,
    #[error("bound violated: {0}")]
    BoundViolation(String),
    #[error("internal verification failed: {0}")]
    VerificationFailure(String),
}

impl Error {
    /// Process exit code for the CLI: 1 usage/parse, 2 precondition, 3 oracle failure.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            Syntax { .. } | NonIntegerExponent { .. } | Config(_) => 1,
            ValuationMismatch { .. }
            | PartitionGap { .. }
            | NegativeWeight
            | BoundViolation(_)
            | VerificationFailure(_) => 3,
            _ => 2,
        }
    }
}
