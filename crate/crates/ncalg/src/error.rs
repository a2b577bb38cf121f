use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NcError {
    #[error("generator index {0} is not part of {1}")]
    UnknownGenerator(u8, &'static str),
    #[error("no {side} action is defined on {alg}")]
    NoAction { alg: &'static str, side: &'static str },
    #[error("the right action by e or f leaves {0}; use the graded right action through the embedding")]
    LeavesAlgebra(&'static str),
    #[error("expected an element of {expected}, got {got}")]
    WrongAlgebra { expected: &'static str, got: &'static str },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
