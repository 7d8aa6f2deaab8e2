use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("inexact division")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    #[error("no binding for variable `{0}`")]
    MissingBinding(&'static str),
    #[error("too few colors: {0}")]
    TooFewColors(u32),
    #[error("instance too large: {vertices} vertices exceeds the cap of {cap}")]
    InstanceTooLarge { vertices: usize, cap: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),
    #[error("inconsistent local view: {0}")]
    InconsistentView(String),
    #[error("cycle length must be at least 3 (got {0})")]
    CycleTooShort(usize),
    #[error("undefined value: {0}")]
    Undefined(&'static str),
    #[error("delta-star mismatch with closed form")]
    DeltaStarMismatch,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
