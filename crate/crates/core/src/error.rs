use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degree overflow: degree {degree} exceeds bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    Budget { what: String, needed: usize, budget: usize },
    /// `d[index + 1] * d[index]` does not vanish.
    #[error("d{next} * d{index} is nonzero", next = .index + 1)]
    NotAComplex { index: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
