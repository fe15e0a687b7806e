use thiserror::Error;

/// Errors raised by the exact-arithmetic core.
///
/// Every variant is a domain error: the caller asked for something the
/// mathematics does not allow, or that this crate deliberately refuses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown lattice name `{0}`")]
    UnknownLattice(String),
    #[error("lattice `{0}` requires a dimension argument")]
    MissingDimension(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square or has mismatched dimensions")]
    Shape,
    #[error("degenerate Gram matrix (determinant 0)")]
    Degenerate,
    #[error("rescaling factor must be nonzero")]
    ZeroScale,
    #[error("vector is zero")]
    ZeroVector,
    #[error("vector is not primitive (content {0})")]
    NotPrimitive(String),
    #[error("vector is isotropic (self-pairing 0)")]
    Isotropic,
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("form is indefinite")]
    Indefinite,
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("-{0} is not a fundamental discriminant")]
    NotFundamental(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unsupported field with discriminant -{0}: {1}")]
    UnsupportedField(u64, String),
    #[error("ideal is not coprime to the conductor")]
    NotCoprime,
    #[error("{0} is not coprime to the level")]
    NotCoprimeToLevel(i64),
    #[error("element is zero")]
    ZeroElement,
    #[error("no generator found for the ideal")]
    NotPrincipal,
    #[error("coefficient c_{0} is not a rational integer")]
    NonIntegralCoefficient(u64),
    #[error("eta product leading exponent {0}/24 is not integral")]
    NonIntegralExponent(i64),
    #[error("{0} divides the level; no Frobenius data is claimed")]
    BadPrime(u64),
    #[error("brute-force guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("form is degenerate modulo {0}")]
    DegenerateModP(u64),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
