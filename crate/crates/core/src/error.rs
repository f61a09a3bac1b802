use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u32),

    #[error("incompatible conductors: element lives in Q(zeta_{element}), automorphism acts on Q(zeta_{automorphism})")]
    IncompatibleConductor { element: u32, automorphism: u32 },

    #[error("exponent {exponent} is not a unit modulo {conductor}")]
    NotAUnit { exponent: i64, conductor: u32 },

    #[error("sign requested for a non-real cyclotomic number")]
    NotReal,

    #[error("coefficient overflow in integer matrix kernel")]
    Overflow,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("weight {0:?} is not in P_+ for this algebra")]
    UnknownWeight(Vec<u32>),

    #[error("simple current {0} does not belong to this algebra")]
    ForeignCurrent(String),

    #[error("conjugation index {index} out of range (algebra has {available})")]
    ConjugationOutOfRange { index: usize, available: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parameter constraint violated: {0}")]
    Constraint(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("modular data construction failed: {0}")]
    Construction(String),

    #[error("Galois row matching failed for exponent {ell}: row {row} has no signed image")]
    GaloisMismatch { ell: i64, row: usize },

    #[error("selection rule violated: {0}")]
    SelectionRule(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
