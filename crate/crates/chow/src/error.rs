use thiserror::Error;

pub type Result<T> = std::result::Result<T, ChowError>;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ChowError {
    #[error("unknown presentation or map: {0}")]
    UnknownName(String),
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("degree mismatch for {generator}: expected {expected}, got {actual}")]
    DegreeMismatch { generator: String, expected: u32, actual: u32 },
    #[error("relation family does not grow in degree: {0}")]
    FamilyDoesNotGrow(String),
    #[error("no solution")]
    NoSolution,
    #[error("solution is not unique modulo the ideal")]
    NonUnique,
}
