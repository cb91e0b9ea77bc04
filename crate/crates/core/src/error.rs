use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("the A-block of the operator is not invertible")]
    SingularBlock,

    #[error("cover is not connected: generator images do not act transitively on {0} sheets")]
    DisconnectedCover(usize),

    #[error("scenario is invalid: {0}")]
    InvalidScenario(String),

    #[error("selection is not closed under the event rules: {0}")]
    SelectionNotClosed(String),

    #[error("relation system is inconsistent: {0}")]
    Inconsistent(String),

    #[error("relation system is underdetermined: {0} free unknowns remain")]
    Underdetermined(usize),

    #[error("rank bound violated at l = {l}: rank {rank} < {bound}")]
    BoundViolated { l: u32, rank: usize, bound: usize },
}
