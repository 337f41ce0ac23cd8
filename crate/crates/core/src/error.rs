use thiserror::Error;

/// Errors raised by the library. Every variant is an input or precondition
/// problem; exact arithmetic never fails on its own.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("tropical polynomial must have at least one monomial")]
    EmptyPolynomial,

    #[error("operation requires a bivariate polynomial (n = 2), got n = {0}")]
    NotBivariate(usize),

    #[error("operation requires zero coefficients; monomial {index} has coefficient {coeff}")]
    NonZeroCoefficient { index: usize, coeff: String },

    #[error("Newton polygon is degenerate (dimension {0}); a tropical curve needs a 2-dimensional polygon")]
    DegenerateNewtonPolygon(usize),

    #[error("zero direction vector")]
    ZeroDirection,

    #[error("invalid cell pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("facet {facet} has {found} lattice point(s) in the window, at least 2 are required")]
    FacetTooSmall { facet: usize, found: usize },

    #[error("generator check failed: {0}")]
    GeneratorCheck(String),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
