use num_complex::Complex;
use reps::{OperatorMatrix, RepScalar};
use triples::SpectralTriple;

use crate::norms::{interior_residual, EXACT_TOL};
use crate::{CheckResult, Verdict, VerifyError};

fn result<T: RepScalar>(triple: &SpectralTriple<T>, id: &str, residual: f64) -> CheckResult {
    let mut r = CheckResult::new(id, triple.kind.slug());
    r.truncations = vec![triple.descriptor().truncation];
    r.residuals = vec![residual];
    r.tolerance = EXACT_TOL;
    r.verdict = Verdict::from_bool(residual < EXACT_TOL);
    r
}

/// Deterministic test vector with all entries nonzero.
fn probe<T: RepScalar>(n: usize, a: f64, b: f64) -> Vec<Complex<T>> {
    (0..n).map(|k| Complex::new(T::lit((a * (k as f64 + 1.0)).sin()), T::lit((b * (k as f64 + 1.0)).cos()))).collect()
}

fn inner<T: RepScalar>(u: &[Complex<T>], v: &[Complex<T>]) -> Complex<T> {
    u.iter().zip(v).fold(Complex::new(T::lit(0.0), T::lit(0.0)), |s, (x, y)| s + x.conj() * y)
}

/// `J` antiunitary, `J² = -1`, `JD = DJ`, and `γJ = -Jγ` for even triples.
pub fn real_structure_suite<T: RepScalar>(triple: &SpectralTriple<T>) -> Result<Vec<CheckResult>, VerifyError> {
    let j = triple.real.as_ref().ok_or_else(|| VerifyError::Missing(format!("{} has no real structure", triple.kind.slug())))?;
    let mask = triple.rep.interior_mask(1);
    let n = triple.dim();
    let id = OperatorMatrix::identity(triple.basis().clone());
    let (u, v) = (probe::<T>(n, 1.3, 0.7), probe::<T>(n, 0.37, 2.1));
    let anti = (inner(&j.apply(&u), &j.apply(&v)) - inner(&v, &u)).norm().as_f64();
    let mut out = vec![
        result(triple, "real.antiunitary", anti),
        result(triple, "real.square", interior_residual(&j.square().add(&id), &mask)),
        result(triple, "real.dirac", interior_residual(&j.conjugate_op(&triple.dirac).sub(&triple.dirac), &mask)),
    ];
    if let Some(g) = &triple.gamma {
        out.push(result(triple, "real.grading", interior_residual(&j.conjugate_op(g).add(g), &mask)));
    }
    Ok(out)
}

/// `γ² = 1`, `[γ, π(x)] = 0` on generators, `Dγ + γD = 0`.
pub fn grading_suite<T: RepScalar>(triple: &SpectralTriple<T>) -> Result<Vec<CheckResult>, VerifyError> {
    let g = triple.gamma.as_ref().ok_or_else(|| VerifyError::Missing(format!("{} is odd", triple.kind.slug())))?;
    let mask = triple.rep.interior_mask(1);
    let id = OperatorMatrix::identity(triple.basis().clone());
    let even = triple.rep.generators().iter().map(|a| interior_residual(&a.commutator(g), &mask)).fold(0.0, f64::max);
    Ok(vec![
        result(triple, "grading.square", interior_residual(&g.mul(g).sub(&id), &mask)),
        result(triple, "grading.algebra-even", even),
        result(triple, "grading.dirac-odd", interior_residual(&triple.dirac.mul(g).add(&g.mul(&triple.dirac)), &mask)),
    ])
}
