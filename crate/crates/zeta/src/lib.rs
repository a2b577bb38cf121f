//! Spectral zeta functions of the truncated triples: partial sums of
//! `Tr |D|^{-z}`, the summability table of the standard Podleś sphere, and
//! exact pole sets for spectra with polynomial multiplicities.

mod csvout;
mod partial;
mod poles;
mod summability;

pub use csvout::{write_spectrum_csv, write_summability_csv, write_zeta_csv};
pub use partial::{cumulative_sums, growth_exponent, zeta_grid, zeta_partial, AbsSpectrum, KERNEL_TOL};
pub use poles::{law_entries, multiplicity_law, pole_set, validate_law, LinearSeries, MultiplicityLaw};
pub use summability::{corrected_bound, geometric_tail, printed_bound, sigma_over_log, summability_report, SummabilityRow};

#[derive(Debug, thiserror::Error)]
pub enum ZetaError {
    #[error("spectrum is not [k]_q with multiplicity 4k: {0}")]
    NotExponential(String),
    #[error("no polynomial multiplicity law")]
    NotPolynomial,
    #[error("multiplicity law disagrees with the spectrum: {0}")]
    LawMismatch(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Triple(#[from] triples::TripleError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
