//! U_q(su(2)) representation theory on the truncated Hilbert spaces:
//! labelled bases, a small sparse complex operator type, the irreps `σ_ℓ`,
//! the spin-½ coupled bases and the symmetry-action matrices.

mod action;
mod basis;
mod coupled;
mod irrep;
mod sparse;

pub use action::{action_matrix, combined_action, symmetry_action, twisted_right_operator, ActionFamily, ActionSide, SymmetryAction};
pub use basis::{Basis, BasisLabel, Cutoff, Family};
pub use coupled::{bk_change_of_basis, conjugate_by, lift_to_spin, spinor_change_of_basis};
pub use irrep::{irrep, sigma_entry, IrrepBlock, UGen};
pub use sparse::{OperatorMatrix, PowerIteration};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum UqError {
    #[error("unsupported symmetry action: {0}")]
    Unsupported(String),
}

pub type OperatorMatrix64 = OperatorMatrix<f64>;
pub type IrrepBlock64 = IrrepBlock<f64>;
pub type Complex64 = num_complex::Complex<f64>;
