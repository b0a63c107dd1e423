use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels and the checkers.
///
/// Conjecture failures are not errors: they surface as a failing
/// [`CheckReport`](crate::spectra::CheckReport) verdict instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid base {0}: must be at least 2")]
    InvalidBase(u64),
    #[error("invalid modulus {0}: must be a prime below 2^31")]
    InvalidModulus(u64),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: String, right: String },
    #[error("operation requires a field, got {0}")]
    UnsupportedDomain(String),
    #[error("matrix is singular")]
    Singular,
    #[error("integer matrix is not unimodular (det = {0})")]
    NonUnimodular(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("integer polynomial division requires a monic divisor")]
    NonMonicDivisor,
    #[error("multiplicity of a factor in the zero polynomial is undefined")]
    UndefinedMultiplicity,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("polynomial vanishes at zero")]
    ZeroRoot,
    #[error("unsupported reduction modulus {0}: only 2 and 3 have integer reductions")]
    UnsupportedReduction(u64),
    #[error("singular 2x2 generator")]
    SingularGenerator,
    #[error("degenerate autosimilar seed: leading minor of size {0} vanishes")]
    Degenerate(usize),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("conjecture violated at p={p}, l={l}, k={k}: {detail}")]
    ConjectureViolation {
        p: u64,
        l: u32,
        k: u64,
        detail: String,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
