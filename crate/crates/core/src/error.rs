use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("malformed grid: {0}")]
    MalformedGrid(String),
    #[error("not reduced: {crosses} crosses but the traced permutation has length {length}")]
    NotReduced { crosses: usize, length: usize },
    #[error("cross on the anti-diagonal at ({0},{1})")]
    CrossOnAntidiagonal(usize, usize),
    #[error("inverse chute move condition {condition} violated: {detail}")]
    MoveConditionViolated { condition: u8, detail: String },
    #[error("not an rc-graph of a zigzag permutation: {0}")]
    NotAZigzagRcGraph(String),
    #[error("partition {partition} does not fit inside the staircase of size {n}")]
    PartitionOutOfBounds { partition: String, n: usize },
    #[error("malformed Dyck path: {0}")]
    MalformedPath(String),
    #[error("malformed bracketing: {0}")]
    MalformedBracketing(String),
    #[error("Edelman-Greene insertion failed: {0}")]
    InsertionInconsistency(String),
    #[error("invalid Q tableau: {0}")]
    InvalidQTableau(String),
    #[error("boxes do not form a partition: {0}")]
    BoxesNotPartition(String),
    #[error("permutation {0} does not satisfy the local equations condition")]
    ConditionNotSatisfied(String),
    #[error("parse error: {0}")]
    Parse(String),
}
