use crate::arith::Point;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point set is empty")]
    EmptySet,
    #[error("duplicate point {0}")]
    DuplicatePoint(Point),
    #[error("a line needs two distinct points")]
    DegenerateLine,
    #[error("slope of a vertical line is undefined")]
    VerticalLine,
    #[error("points {0} and {1} share an x-coordinate")]
    DuplicateX(usize, usize),
    /// Indices of a collinear triple.
    #[error("points {} {} {} are collinear", .0[0], .0[1], .0[2])]
    NotGeneralPosition([usize; 3]),
    #[error("{n} points exceed the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("verifier produced an invalid witness: {0}")]
    InvalidWitness(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
