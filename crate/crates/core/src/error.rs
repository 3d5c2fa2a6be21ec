use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be greater than one")]
    NotGreaterThanOne,
    #[error("interval does not isolate exactly one real root of the polynomial")]
    NoRootIsolated,
    #[error("isolated root is not greater than one")]
    RootNotGreaterThanOne,
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("words have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("comparison undecided within horizon {horizon}")]
    UndecidedAtHorizon { horizon: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("sequence is not the tail of an expansion: {0}")]
    NotAnExpansionTail(String),
    #[error("horizon too short: need {needed} known digits, have {available}")]
    HorizonTooShort { needed: usize, available: usize },
    #[error("answer unknown at horizon {horizon}")]
    UnknownAtHorizon { horizon: usize },
    #[error("periodicity of the expansion of l is not certified")]
    UnknownTail,
    #[error("series constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("series constant term must be {expected} here")]
    BadConstantTerm { expected: i32 },
    #[error("coefficient {index} is not an integer")]
    NonIntegerCoefficient { index: usize },
    #[error("base outside the sub-golden range")]
    NotInRange,
    #[error("factorization over the morphism words failed at position {position}")]
    ParseFailure { position: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("malformed digit string: {0}")]
    DigitSyntax(String),
    #[error("malformed base: {0}")]
    BadBeta(String),
}

pub type Result<T> = std::result::Result<T, Error>;
