//! Checks of the spectral-triple axioms on truncations: algebra relations,
//! equivariance, real structure and grading, commutant and first-order
//! conditions (exact or up to infinitesimals), bounded commutators and the
//! twisted cyclic cocycle of the standard Podleś sphere.
//!
//! Each check returns a [`CheckResult`]. Residuals are read off the interior
//! compression, where truncated products agree with the infinite matrices.

mod bounded;
mod cocycle;
mod commutant;
mod equivariance;
pub mod norms;
mod relations;
mod result;
mod structure;

pub use bounded::{check_commutator_bounded, check_dh_formula, commutator_norm, CAUCHY_TOL, GROWTH_TOL};
pub use cocycle::{cocycle_residuals, cocycle_suite, sigma, sigma_inv, sphere_monomials, twisted_cocycle_tau, TauEvaluator};
pub use commutant::{check_commutant, check_first_order, commutant_suite, expectation, judge, Expectation, NONTRIVIAL_FLOOR};
pub use equivariance::{check_equivariance, covariance_residual, invariance_residual, BROKEN_FLOOR};
pub use relations::check_relations;
pub use result::{CheckResult, Verdict};
pub use structure::{grading_suite, real_structure_suite};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Triple(#[from] triples::TripleError),
    #[error(transparent)]
    Rep(#[from] reps::RepError),
    #[error(transparent)]
    Action(#[from] uqrep::UqError),
    #[error(transparent)]
    Algebra(#[from] ncalg::NcError),
    #[error("{0}")]
    Missing(String),
    #[error("bad input: {0}")]
    Input(String),
}

pub type TauEvaluator64 = TauEvaluator<f64>;
