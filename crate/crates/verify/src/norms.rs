use qcore::HalfInt;
use reps::{OperatorMatrix, PowerIteration, RepScalar};
use uqrep::Basis;

/// Tolerance for identities that hold exactly.
pub const EXACT_TOL: f64 = 1e-12;
/// Tolerance for composite symbolic-numeric checks.
pub const COMPOSITE_TOL: f64 = 1e-10;
/// Relative tolerance on fitted exponents.
pub const EXPONENT_TOL: f64 = 0.15;

pub fn power_iteration() -> PowerIteration {
    PowerIteration::default()
}

/// Frobenius norm of the compression to `mask × mask`.
pub fn interior_residual<T: RepScalar>(x: &OperatorMatrix<T>, mask: &[bool]) -> f64 {
    x.frobenius_masked(mask).as_f64()
}

/// Operator norm of the compression to `mask × mask`.
pub fn interior_norm<T: RepScalar>(x: &OperatorMatrix<T>, mask: &[bool]) -> f64 {
    x.op_norm_masked(mask, power_iteration()).as_f64()
}

/// `(j, ‖X restricted to levels ≥ j‖)` for every level `j` in `[lo, hi]`
/// carried by the mask.
pub fn tail_norms<T: RepScalar>(x: &OperatorMatrix<T>, basis: &Basis, mask: &[bool], lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let mut levels: Vec<HalfInt> = basis.labels().iter().zip(mask).filter(|(_, m)| **m).map(|(l, _)| l.level()).collect();
    levels.sort();
    levels.dedup();
    levels
        .into_iter()
        .filter(|j| j.to_f64() >= lo - 1e-9 && j.to_f64() <= hi + 1e-9)
        .map(|j| {
            let sub: Vec<bool> = basis.labels().iter().zip(mask).map(|(l, m)| *m && l.level() >= j).collect();
            (j.to_f64(), interior_norm(x, &sub))
        })
        .collect()
}

/// Least-squares slope of `ln y` against `x`, skipping zeros.
pub fn log_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points.iter().filter(|p| p.1 > 0.0).map(|&(x, y)| (x, y.ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
