use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("negative part {0} in partition")]
    NegativePart(i64),
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<i64>),
    #[error("cannot parse shape {0:?}")]
    ShapeSyntax(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size {size} exceeds enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("argument total {0} is negative")]
    NegativeTotal(i64),
    #[error("singular argument: {0}")]
    Singular(String),
    #[error("incompatible factorial content: {0}")]
    FactorialContent(String),
    #[error("no validity region applies to {0}")]
    NoRegion(String),
    #[error("cannot identify branching row {row}: {detail}")]
    Identification { row: usize, detail: String },
    #[error("unknown identifier {0:?}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
