use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    Group(#[from] crate::groups::GroupViolation),
    #[error("invalid algebra: {0}")]
    Algebra(#[from] crate::gstar::AlgebraViolation),
    #[error("algebras are graded by different groups")]
    GroupMismatch,
    #[error("degree {n} exceeds the configured cap {cap}")]
    DegreeCap { n: usize, cap: usize },
    #[error("operation requires a unital algebra")]
    NotUnital,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("variable index sets overlap")]
    OverlappingVariables,
    #[error("highest weight templates exist only up to size 2 (got {0})")]
    TemplateScope(usize),
    #[error("multipartition {0} has no proper highest weight vector")]
    ImproperMultipartition(String),
    #[error("not polynomial within range")]
    NotPolynomial,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
