use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{m} exceeds the supported size")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("entry {entry} is not a valid ramification invariant for p = {p}")]
    InvalidEntry { entry: u32, p: u32 },
    #[error("partitions live over different contexts (p = {0}/{1}, d = {2}/{3})")]
    MismatchedContext(u32, u32, u32, u32),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("rational function is constant")]
    ConstantFunction,
    #[error("denominator has {missing} degrees of irreducible factors without roots in F_{order}")]
    PoleOutsideField { order: u32, missing: usize },
    #[error("supplied linear factors do not multiply to the denominator")]
    FactorizationMismatch,
    #[error("denominator vanishes identically at the chosen parameter")]
    DenominatorVanishes,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("no auxiliary root found within extension cap {cap}")]
    NoAuxiliaryRoot { cap: u64 },
    #[error("linear system is singular")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
