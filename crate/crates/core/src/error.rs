use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid arc ({0}, {1}): length must be at least 2")]
    InvalidArc(i64, i64),

    #[error("rank must be positive")]
    ZeroRank,

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("invalid polygon diagram: {0}")]
    InvalidPolygon(String),

    #[error("face {0:?} is mixed: some but not all of its inner diagonals are present")]
    MixedFace(Vec<usize>),

    #[error("diagram is not a finite half: {0}")]
    NotFiniteHalf(String),

    #[error("invalid wing decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid pointed cycle: {0}")]
    InvalidPointedCycle(String),

    #[error("{what} cap exceeded: requested {requested}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("{0} does not divide {1}")]
    NotADivisor(usize, usize),

    #[error("reduction modulo the {0}-th cyclotomic polynomial is not constant")]
    NonConstantEvaluation(usize),

    #[error("no positive root found")]
    NoRoot,

    #[error("series with constant term {0} is not invertible over the integers")]
    NotAUnit(String),

    #[error("coefficient of z^{0} is not integral")]
    NonIntegral(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
