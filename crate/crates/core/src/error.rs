use thiserror::Error;

use crate::coeff::CoeffError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum JackError {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("sequence length {n} is smaller than bipartition length {len}")]
    LengthTooSmall { n: usize, len: usize },
    #[error("sequences are not comparable: {0}")]
    IncomparableInput(String),
    #[error("operator is defined on positive generators only; found p{0}")]
    NotPositivePart(i32),
    #[error("factor {0} vanishes identically")]
    SingularProduct(String),
    #[error("singular parameter: {0}")]
    SingularParameter(String),
    #[error("not an eigenvector: {0}")]
    NotEigenvector(String),
    #[error("p0 survives the limit in coefficient {0}")]
    ResidualP0(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, JackError>;
