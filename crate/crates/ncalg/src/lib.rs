//! Noncommutative *-polynomials over the coordinate algebras of SU_q(2) and
//! the standard, equatorial and generic Podleś spheres.
//!
//! Every algebra is a fixed rewriting system whose left sides are words of
//! length two; normal forms are PBW-type monomials. The same code runs with
//! exact Laurent coefficients in `q^{1/2}` or with floats at a numeric `q`.

mod action;
mod coeff;
mod error;
mod parse;
mod podles;
mod poly;
mod preset;

pub use action::{action_table, ActionTable, HopfGenerator, HopfSymbol, Side};
pub use coeff::{Coeff, ExactCtx, FloatCtx};
pub use error::NcError;
pub use parse::parse_poly;
pub use podles::{
    act_right_graded, check_projector, embed_podles, graded_degree, grading_shift_holds, spinor_projector, Grade,
    ProjectorResidual,
};
pub use poly::{NCPoly, Word};
pub use preset::{AlgebraId, AlgebraPreset, CriticalPair, GeneratorInfo, Rule};

/// Exact coefficients: Laurent polynomials in `q^{1/2}` over the rationals.
pub type ExactCoeff = qcore::ExactLaurent;
pub type ExactPoly = NCPoly<ExactCoeff>;
pub type ExactPreset = AlgebraPreset<ExactCoeff>;
pub type Poly64 = NCPoly<f64>;
pub type Preset64 = AlgebraPreset<f64>;

/// Evaluate exact coefficients at a numeric `q`.
pub fn to_float(p: &ExactPoly, q: f64) -> Poly64 {
    p.map_coeffs(|c| c.to_f64_at(q))
}

/// Exact preset by id; `c` is only read by the generic sphere.
pub fn exact_preset(id: AlgebraId, c: qcore::Rational) -> ExactPreset {
    AlgebraPreset::new(id, ExactCtx { c })
}

/// Double precision preset at `q` (and `c` for the generic sphere).
pub fn float_preset(id: AlgebraId, q: f64, c: f64) -> Preset64 {
    AlgebraPreset::new(id, FloatCtx::with_c(q, c))
}
