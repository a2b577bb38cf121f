//! Truncated matrix representations of the coordinate algebras on their
//! Hilbert spaces: the left regular and spinorial representations of
//! SU_q(2), the Bibikov–Kulish space, the shift representation and the
//! three Podleś spheres.
//!
//! Truncation is by spin (or shift index). Each generator letter moves the
//! level by a bounded amount, so a word of length `w` is exact on labels at
//! least `w` letter-margins inside the cutoff; residuals are always read off
//! that interior.

pub mod formulas;
mod representation;

pub use representation::{haar_state, Evaluated, RepFamily, RepScalar, Representation};
pub use uqrep::{Basis, BasisLabel, Cutoff, Family, OperatorMatrix, PowerIteration};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("truncation too small: need spin {needed}, have {have}")]
    TruncationTooSmall { needed: String, have: String },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{0}")]
    WrongFamily(String),
}

pub type Representation64 = Representation<f64>;
pub type Evaluated64 = Evaluated<f64>;
