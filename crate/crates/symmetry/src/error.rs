use thiserror::Error;

#[derive(Debug, Error)]
pub enum SymmetryError {
    #[error("graph error: {0}")]
    Graph(#[from] graphcore::GraphError),
    #[error("permutation error: {0}")]
    Perm(#[from] perm::PermError),
    #[error("family error: {0}")]
    Family(#[from] families::FamilyError),
    #[error("group degree {group} does not match graph order {graph}")]
    DegreeMismatch { group: usize, graph: usize },
    #[error("element enumeration exceeds the cap of {cap}")]
    Capped { cap: u64 },
    #[error("{0}")]
    Inapplicable(String),
}
