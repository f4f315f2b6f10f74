use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range 2 <= p < 65536")]
    ModulusOutOfRange(u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,
    #[error("the generator is a monomial, so it generates the unit ideal")]
    MonomialGenerator,
    #[error("empty point set")]
    EmptyPointSet,
    #[error("degenerate hull: {0}")]
    DegenerateHull(String),
    #[error("face does not belong to the hull of the polynomial")]
    FaceNotInHull,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("witness does not satisfy its relation modulo the generator")]
    InvalidWitness,
    #[error("search budget exhausted: {0}")]
    SearchBudget(String),
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
