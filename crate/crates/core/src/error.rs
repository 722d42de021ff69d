//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("singular substitution matrix")]
    SingularMatrix,
    #[error("gcd of two zero polynomials")]
    GcdBothZero,
    #[error("zero linear form at position {0}")]
    ZeroForm(usize),
    #[error("proportional hyperplanes at positions {0} and {1}: {2}")]
    DuplicateHyperplane(usize, usize, String),
    #[error("hyperplane not in arrangement: {0}")]
    HyperplaneNotFound(String),
    #[error("unknown corpus name: {0}")]
    UnknownCorpus(String),
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("lattice too large for isomorphism search: {0} flats (limit {1})")]
    LatticeTooLarge(usize, usize),
    #[error("certification budget exhausted after {0} node expansions")]
    BudgetExhausted(usize),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    /// A theorem with verified preconditions failed on concrete data.
    /// Never masked; the CLI maps this to exit code 3.
    #[error("falsification event: {0}")]
    Falsification(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
