use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("byte {byte:#04x} at position {pos} is not valid graph6 data")]
    BadByte { byte: u8, pos: usize },
    #[error("input ends before the encoded adjacency data is complete")]
    Truncated,
    #[error("trailing bytes after the encoded adjacency data")]
    TrailingGarbage,
    #[error("padding bits are not zero")]
    NonZeroPadding,
    #[error("order {0} exceeds the supported graph6 range")]
    UnsupportedOrder(u64),
    #[error("digraph6 input must start with '&'")]
    MissingDigraphHeader,
    #[error("label table has {got} entries for {expected} vertices")]
    LabelCountMismatch { got: usize, expected: usize },
    #[error("permutation degree {got} does not match graph order {expected}")]
    PermDegreeMismatch { got: usize, expected: usize },
}
