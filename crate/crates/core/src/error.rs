use alloc::string::String;

/// Errors raised by the algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("both polynomials have degree 0 in `{0}`")]
    DegreeZero(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("division is not exact")]
    InexactDivision,
    #[error("denominator of term {term} is divisible by {prime}")]
    BadReduction { term: String, prime: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("mismatched graded algebras")]
    AlgebraMismatch,
    #[error("element is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("algebra has no intersection table")]
    MissingTable,
    #[error("missing class `{0}`")]
    MissingClass(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degenerate chart: {0}")]
    DegenerateChart(String),
    #[error("point lies in the indeterminacy locus")]
    Indeterminate,
    #[error("incidence relation violated")]
    Incidence,
    #[error("chart lies inside the exceptional locus")]
    InsideExceptional,
    #[error("index {0} is not a marked node")]
    NotMarked(usize),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
