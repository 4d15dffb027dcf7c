use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image list of length {len} is not a permutation: {reason}")]
    NotAPermutation { len: usize, reason: String },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("cycle entry {point} repeated or out of range for degree {degree}")]
    BadCycle { point: usize, degree: usize },
    #[error("group order {order} exceeds enumeration cap {cap}")]
    Capped {
        order: num_bigint::BigUint,
        cap: u64,
    },
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("subgroup is not normalised by the ambient group")]
    NotNormal,
    #[error("element does not stabilise the required point {point}")]
    NotInStabilizer { point: usize },
}
