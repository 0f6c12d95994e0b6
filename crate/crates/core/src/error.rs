use thiserror::Error;

use crate::rules::AttributeId;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a rule system must contain at least one rule")]
    EmptySystem,

    #[error("repeated attribute {0} in the left-hand side of a rule")]
    RepeatedAttribute(AttributeId),

    #[error("equation system is inconsistent on attribute {0}")]
    Inconsistent(AttributeId),

    #[error("operation requires n(S) = 0, but the system has {0} attribute(s)")]
    NotDegenerate(usize),

    #[error("operation requires n(S) > 0, but the system has no attributes")]
    NoAttributes,

    #[error("attribute {0} does not occur in the rule system")]
    UnknownAttribute(AttributeId),

    #[error("attribute {0} is not assigned")]
    MissingAttribute(AttributeId),

    #[error("value {value} is not in EV_S({attr})")]
    ValueOutOfDomain { attr: AttributeId, value: String },

    #[error("budget exceeded: {dimension} = {actual} exceeds the limit of {limit}")]
    BudgetExceeded {
        dimension: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("rule {0} is not a member of S^max")]
    NotInSmax(usize),

    #[error("value provider failed: {0}")]
    Provider(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
