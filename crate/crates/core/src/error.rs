use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("search budget exceeded: {needed} candidate sets needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("exact oracle supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("set cover instance is infeasible: element {0} is uncovered")]
    InfeasibleCover(usize),
    #[error("not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{0} is not a secure connected dominating set")]
    NotScds(String),
    #[error("not a dominating set: vertex {0} is undominated")]
    NotDominating(usize),
    #[error("not a vertex cover: edge ({0}, {1}) is uncovered")]
    NotCover(usize, usize),
    #[error("vertex {0} lies inside the set")]
    InsideSet(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
