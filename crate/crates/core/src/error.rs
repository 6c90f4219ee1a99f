use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(String, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division not exact: ({dividend}) / ({divisor}) leaves remainder {remainder}")]
    DivisionNotExact {
        dividend: String,
        divisor: String,
        remainder: String,
    },
    #[error("empty word")]
    EmptyWord,
    #[error("word {0} has no standard factorization")]
    NoFactorization(String),
    #[error("word {0} is not a Lyndon word")]
    NotLyndon(String),
    #[error("letter {letter} outside alphabet of size {size}")]
    LetterOutOfRange { letter: u32, size: u8 },
    #[error("invalid alphabet size {0}")]
    InvalidAlphabet(usize),
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(u8, u8),
    #[error("unsupported coefficient ring: {0}")]
    UnsupportedRing(String),
    #[error("order violation: {alpha} must precede {beta}")]
    OrderViolation { alpha: String, beta: String },
    #[error("invalid PBW monomial: {0}")]
    InvalidMonomial(String),
    #[error("identity violated: {0}")]
    TheoremViolation(String),
    #[error("endomorphism does not map 1 to 1")]
    NotUnital,
    #[error("operator is not a sigma-derivation: {0}")]
    NotASigmaDerivation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree {requested} exceeds cap {cap}")]
    DegreeCap { requested: usize, cap: usize },
    #[error("term count exceeded limit of {0}")]
    TermLimit(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
