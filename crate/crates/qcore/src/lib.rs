//! Scalar plumbing shared by every other crate in the workspace: the
//! floating scalar trait, exact half-integer spins, q-numbers, the spin-½
//! coupling coefficients and Laurent polynomials in `t = q^{1/2}`.

mod coupling;
mod error;
mod halfint;
mod laurent;
mod qnum;
mod scalar;

pub use coupling::{cs_pair, cs_pair_squared_exact, spin_half_coupling, CouplingPair};
pub use error::QError;
pub use halfint::HalfInt;
pub use laurent::LaurentPoly;
pub use qnum::{q_number, q_number_half, q_number_numerator_exact, QParam};
pub use scalar::Scalar;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// Laurent polynomial in `t = q^{1/2}` with exact rational coefficients.
pub type ExactLaurent = LaurentPoly<Rational>;
/// Double precision deformation parameter.
pub type QParam64 = QParam<f64>;
/// Double precision coupling pair.
pub type CouplingPair64 = CouplingPair<f64>;
