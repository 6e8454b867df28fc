use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no such edge ({0}, {1})")]
    NoSuchEdge(usize, usize),

    #[error("edge ({0}, {1}) already present")]
    EdgeExists(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("parameter {value} outside the domain of {family}")]
    OutOfDomain { family: &'static str, value: usize },

    #[error("unknown graph name {0:?}")]
    UnknownName(String),

    #[error("graph not cubic")]
    NotCubic,

    #[error("invalid split: {0}")]
    InvalidSplit(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("Martinov violation: no 4-connected contraction of {0}")]
    MartinovViolation(String),

    #[error("oracle for {name} produced {classes} isomorphism classes, expected exactly one")]
    OracleNotUnique { name: String, classes: usize },

    #[error("graph matches neither exception class: {0}")]
    Unclassified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
