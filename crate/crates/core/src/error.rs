use thiserror::Error;

use crate::graph::GraphIssue;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid Dyer graph: {}", format_issues(.0))]
    Validation(Vec<GraphIssue>),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),
    #[error("group order exceeds budget of {0}")]
    OrderBudgetExceeded(usize),
    #[error("subset {0} is not spherical")]
    NotSpherical(String),
    #[error("subset {0} contains a vertex of infinite order")]
    ContainsInfiniteVertex(String),
    #[error("graph is not a Coxeter graph (some f != 2)")]
    NotCoxeter,
    #[error("Coxeter group is not finite")]
    NotFinite,
    #[error("relation is not a strict partial order: {0}")]
    NotAPartialOrder(String),
    #[error("scwol is not connected")]
    NotConnected,
    #[error("edge set is not a maximal tree: {0}")]
    NotATree(String),
    #[error("vertex {0} is on the boundary of the ball")]
    BoundaryVertex(String),
    #[error("edge {0} does not match any labelling case")]
    UnlabelableEdge(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn format_issues(issues: &[GraphIssue]) -> String {
    issues
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
