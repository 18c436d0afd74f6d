use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} exceeds the limit of {limit}")]
    TooLarge { what: &'static str, limit: usize },

    #[error("incomparable matrices: {left} columns vs {right} columns")]
    ColumnMismatch { left: usize, right: usize },

    #[error("{labels} labels given for {columns} columns")]
    LabelCount { labels: usize, columns: usize },

    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),

    #[error("invalid element label {0:?}: labels must be nonempty and contain no whitespace")]
    InvalidLabel(String),

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("element {0:?} is in both the delete set and the contract set")]
    OverlappingMinorSpec(String),

    #[error("a pair needs two distinct elements, got {0:?} twice")]
    SameElement(String),

    #[error("ground set of {size} elements exceeds the enumeration bound {bound}")]
    EnumerationBound { size: usize, bound: usize },

    #[error("target has {target} elements but the host only has {host}")]
    TargetLarger { target: usize, host: usize },

    #[error("unknown catalog name {0:?}")]
    UnknownName(String),

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("cannot split graph: {0}")]
    GraphSplit(String),

    #[error("input is not {required}: {reason}")]
    InputClass { required: &'static str, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
