use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("expected {expected} polynomials, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("matrix has wrong shape: {0}")]
    Shape(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero coefficient in a monomial")]
    ZeroCoefficient,
    #[error("coordinate {0} of the evaluation point is zero")]
    ZeroCoordinate(usize),
    #[error("{0:?} is not a vertex of the Newton polytope")]
    NotAVertex(Vec<i64>),
    #[error("point {0:?} is not a vertex of the polytope")]
    NotAVertexPoint(Vec<String>),
    #[error("face does not contain the vertex")]
    VertexNotInFace,
    #[error("empty point set")]
    EmptyInput,
    #[error("polytope is not full-dimensional")]
    DegeneratePolytope,
    #[error("collection is not developed{}", witness_suffix(.witness))]
    NotDeveloped { witness: Option<Vec<i64>> },
    #[error("polynomial {0} is a monomial")]
    MonomialEquation(usize),
    #[error("expected a single monomial")]
    NotMonomial,
    #[error("singular matrix")]
    Singular,
    #[error("face map does not preserve inclusion")]
    NotOrderPreserving,
    #[error("chain of faces is not a complete flag")]
    NotMaximalFlag,
    #[error("top homology is not of rank one (rank {0})")]
    HomologyRank(usize),
    #[error("truncation bound {bound} too small, need weight {needed}")]
    InsufficientTruncation { bound: i64, needed: i64 },
    #[error("series is not a unit with constant term 1")]
    NotAUnit,
    #[error("weight functionals of the series differ")]
    WeightMismatch,
    #[error("integer overflow in exact integer arithmetic")]
    Overflow,
    #[error("ill-conditioned instance: {0}")]
    IllConditioned(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable index t{index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("zero denominator at position {0}")]
    ZeroDenominator(usize),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

fn witness_suffix(w: &Option<Vec<i64>>) -> String {
    match w {
        Some(w) => format!(" (witness covector {w:?})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
