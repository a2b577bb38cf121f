//! The spectral triples: a representation, a Dirac operator and, where the
//! construction has them, a grading, a real structure and the ideal of
//! infinitesimals. Also spectra, affine isospectrality tests and a linear
//! solver for equivariant Dirac operators.

mod instance;
mod iso;
mod kind;
mod solver;
mod spectrum;

pub use instance::{cutoff_label, i_pow, RealStructure, SpectralTriple, SymmetryCopy};
pub use iso::{classical_s3_dirac, dlssv_c2_scan, isospectral_match, AffineMatch};
pub use kind::{Descriptor, TripleKind};
pub use solver::{solve_equivariant_dirac, ActionFamilyTag, Constraint, DiracSolution, SolverOptions};
pub use spectrum::{abs_spectrum, group_eigenvalues, spectrum, SpectrumEntry};

use reps::RepError;
use uqrep::UqError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TripleError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Action(#[from] UqError),
    #[error("bad truncation: {0}")]
    BadTruncation(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type SpectralTriple64 = SpectralTriple<f64>;
pub type RealStructure64 = RealStructure<f64>;
