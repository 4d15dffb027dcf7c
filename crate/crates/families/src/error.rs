use graphcore::GraphError;
use perm::PermError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("digraph has a digon; an orientation is required")]
    NotOriented,
    #[error("digraph is not 2-in 2-out regular")]
    NotTwoInTwoOutRegular,
    #[error("graph is not 3-valent")]
    NotThreeValent,
    #[error("graph is not connected")]
    NotConnected,
    #[error("group is not vertex-transitive on the graph")]
    NotVertexTransitive,
    #[error("a group generator is not an automorphism of the graph")]
    GeneratorNotAutomorphism,
    #[error("stabiliser orbits on a neighbourhood have sizes {sizes:?}, need one 2 and one 1")]
    OrbitStructure { sizes: Vec<usize> },
    #[error("derived pairing is not an involution at vertex {0}")]
    NotInvolutive(usize),
    #[error("matching does not cover every vertex exactly once")]
    NotPerfectMatching,
    #[error("matching pair {{{0}, {1}}} is not an edge")]
    NotMatchingEdge(usize, usize),
    #[error("blocks {0} and {1} are joined by more than one edge; contraction would collapse a multi-edge")]
    MultiEdgeCollapse(usize, usize),
    #[error("contraction is not 4-valent")]
    NotFourValent,
    #[error("permutation neither preserves nor reverses the orientation")]
    NotOrientationSymmetry,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
}
