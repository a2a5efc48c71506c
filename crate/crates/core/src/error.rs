use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown generator `{name}` at byte {offset}")]
    UnknownGenerator { name: String, offset: usize },
    #[error("malformed exponent `{token}` at byte {offset}")]
    MalformedExponent { token: String, offset: usize },
    #[error("zero exponent in `{token}` at byte {offset}")]
    ZeroExponent { token: String, offset: usize },
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("generator index {index} outside alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },
    #[error("relator index {index} out of range ({count} relators)")]
    RelatorOutOfRange { index: usize, count: usize },
    #[error("generator `{generator}` cannot be eliminated using relator {relator}: {reason}")]
    NotEliminable {
        generator: String,
        relator: usize,
        reason: &'static str,
    },
    #[error("variable lists differ")]
    VariableMismatch,
    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("polynomial syntax error at byte {offset}: {message}")]
    PolySyntax { offset: usize, message: &'static str },
    #[error("division by a non-monomial or inexact division")]
    InexactDivision,
    #[error("substitution image must be a signed monomial")]
    NonMonomialImage,
    #[error("expected a univariate polynomial, found {0} variables")]
    NotUnivariate(usize),
    #[error("expected a polynomial in {expected} variables, found {found}")]
    WrongVariableCount { expected: usize, found: usize },
    #[error("matrix shape {rows}x{cols} is invalid here: {reason}")]
    BadShape {
        rows: usize,
        cols: usize,
        reason: &'static str,
    },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("negative argument: {0}")]
    Negative(&'static str),
    #[error("abelianization map has no image for generator `{0}`")]
    MissingImage(String),
    #[error("invalid map: {0}")]
    InvalidMap(&'static str),
    #[error("degrees do not generate Z/{0}")]
    NotSurjective(u64),
    #[error("relator {relator} has degree {degree} mod {modulus}, expected 0")]
    RelatorDegree { relator: usize, degree: u64, modulus: u64 },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("k={k} and n={n} must satisfy 0 < k < n and gcd(k, n) = 1")]
    NotCoprime { k: i64, n: i64 },
    #[error("empty slope word")]
    EmptySlope,
}
