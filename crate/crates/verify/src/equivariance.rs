use ncalg::{HopfSymbol, NCPoly, Side};
use num_complex::Complex;
use reps::{BasisLabel, OperatorMatrix, RepScalar};
use triples::{SpectralTriple, SymmetryCopy, TripleKind};
use uqrep::{action_matrix, twisted_right_operator, ActionFamily, ActionSide, UGen};

use crate::norms::{interior_residual, COMPOSITE_TOL};
use crate::{CheckResult, Verdict, VerifyError};

/// Lower bound on `‖[D, U]‖` that certifies a broken copy.
pub const BROKEN_FLOOR: f64 = 0.1;

fn sym(u: UGen) -> HopfSymbol {
    match u {
        UGen::E => HopfSymbol::E,
        UGen::F => HopfSymbol::F,
        UGen::K => HopfSymbol::K,
        UGen::KInv => HopfSymbol::KInv,
    }
}

fn symmetry_op<T: RepScalar>(triple: &SpectralTriple<T>, family: ActionFamily, copy: SymmetryCopy, u: UGen) -> Result<OperatorMatrix<T>, VerifyError> {
    let b = triple.basis();
    let q = triple.rep.q;
    Ok(match copy {
        SymmetryCopy::Left => action_matrix(b, family, ActionSide::Left, u, q)?,
        SymmetryCopy::Right => twisted_right_operator(b, family, u, q)?,
    })
}

/// Worst interior residual of `U π(x) − π(u₁·x) U₂` over generators `x` and
/// `u ∈ {e, f, k}` with `Δe = e ⊗ k + k⁻¹ ⊗ e`, `Δk = k ⊗ k`.
pub fn covariance_residual<T: RepScalar>(triple: &SpectralTriple<T>, family: ActionFamily, copy: SymmetryCopy) -> Result<f64, VerifyError> {
    let rep = &triple.rep;
    let alg = rep.preset();
    let side = match copy {
        SymmetryCopy::Left => Side::Left,
        SymmetryCopy::Right => Side::Right,
    };
    let mask = rep.interior_mask(2);
    let one = Complex::new(T::lit(1.0), T::lit(0.0));
    let k = symmetry_op(triple, family, copy, UGen::K)?;
    let mut worst = 0.0f64;
    for g in 0..alg.num_generators() as u8 {
        let x = NCPoly::generator(g);
        let act = |u: UGen| -> Result<OperatorMatrix<T>, VerifyError> { Ok(rep.evaluate(&alg.act_side(side, &[sym(u)], &x)?).matrix) };
        for u in [UGen::E, UGen::F, UGen::K] {
            let lhs = symmetry_op(triple, family, copy, u)?.mul(rep.generator(g));
            let rhs = match u {
                UGen::K => act(UGen::K)?.mul(&k),
                _ => act(u)?.mul(&k).add_scaled(&act(UGen::KInv)?.mul(&symmetry_op(triple, family, copy, u)?), one),
            };
            worst = worst.max(interior_residual(&lhs.sub(&rhs), &mask));
        }
    }
    Ok(worst)
}

/// Worst interior `‖[D, U]‖` over `u ∈ {e, f, k}`.
pub fn invariance_residual<T: RepScalar>(triple: &SpectralTriple<T>, family: ActionFamily, copy: SymmetryCopy) -> Result<f64, VerifyError> {
    let mask = triple.rep.interior_mask(2);
    let mut worst = 0.0f64;
    for u in [UGen::E, UGen::F, UGen::K] {
        let c = triple.dirac.commutator(&symmetry_op(triple, family, copy, u)?);
        worst = worst.max(interior_residual(&c, &mask));
    }
    Ok(worst)
}

fn copy_name(c: SymmetryCopy) -> &'static str {
    match c {
        SymmetryCopy::Left => "left",
        SymmetryCopy::Right => "right",
    }
}

/// Torus symmetry of the shift-type triples: `U = diag(e^{iθ·index})`
/// rotates each generator by a phase and commutes with `D`.
fn torus_check<T: RepScalar>(triple: &SpectralTriple<T>) -> CheckResult {
    let (t1, t2) = (0.7f64, 1.3f64);
    let phase = |lab: &BasisLabel| -> f64 {
        match *lab {
            BasisLabel::Shift { i, j } => t1 * i as f64 + t2 * j as f64,
            BasisLabel::Generic { n, .. } => t1 * n as f64,
            _ => 0.0,
        }
    };
    let cis = |x: f64| Complex::new(T::lit(x.cos()), T::lit(x.sin()));
    let u = OperatorMatrix::diagonal(triple.basis().clone(), |l| cis(phase(l)));
    let ud = u.adjoint();
    // generator rotation phases: α and β lower i and j; b lowers n
    let rot: Vec<f64> = match triple.kind {
        TripleKind::CpShift => vec![-t1, -t2, t1, t2],
        _ => vec![0.0, -t1, t1],
    };
    let mask = triple.rep.interior_mask(2);
    let mut worst = 0.0f64;
    for (g, r) in rot.iter().enumerate() {
        let x = triple.rep.generator(g as u8);
        let lhs = u.mul(x).mul(&ud);
        worst = worst.max(interior_residual(&lhs.sub(&x.scale(cis(*r))), &mask));
    }
    let dinv = interior_residual(&triple.dirac.commutator(&u), &mask);
    let mut out = CheckResult::new("equivariance.torus", triple.kind.slug());
    out.truncations = vec![triple.descriptor().truncation];
    out.residuals = vec![worst, dinv];
    out.tolerance = COMPOSITE_TOL;
    out.verdict = Verdict::from_bool(worst < COMPOSITE_TOL && dinv < COMPOSITE_TOL);
    out
}

/// Covariance and invariance for every copy the family carries. Copies the
/// triple is not built to respect are reported as `equivariance.<copy>.broken`
/// and pass when the breaking is visible above [`BROKEN_FLOOR`].
pub fn check_equivariance<T: RepScalar>(triple: &SpectralTriple<T>) -> Result<Vec<CheckResult>, VerifyError> {
    let Some((family, claimed)) = triple.symmetry.clone() else {
        return match triple.kind {
            TripleKind::CpShift | TripleKind::CpGeneric { .. } => Ok(vec![torus_check(triple)]),
            _ => Err(VerifyError::Missing(format!("{} has no symmetry action", triple.kind.slug()))),
        };
    };
    let copies: &[SymmetryCopy] = match family {
        ActionFamily::L2 | ActionFamily::Spinor => &[SymmetryCopy::Left, SymmetryCopy::Right],
        _ => &[SymmetryCopy::Left],
    };
    let desc = triple.descriptor();
    let mut out = Vec::new();
    for &copy in copies {
        let cov = covariance_residual(triple, family, copy)?;
        let inv = invariance_residual(triple, family, copy)?;
        let expected = claimed.contains(&copy);
        let id = if expected { format!("equivariance.{}", copy_name(copy)) } else { format!("equivariance.{}.broken", copy_name(copy)) };
        let mut r = CheckResult::new(id, desc.triple.slug());
        r.truncations = vec![desc.truncation.clone()];
        r.residuals = vec![cov, inv];
        r.tolerance = COMPOSITE_TOL;
        r.verdict = if expected {
            Verdict::from_bool(cov < COMPOSITE_TOL && inv < COMPOSITE_TOL)
        } else {
            Verdict::from_bool(cov < COMPOSITE_TOL && inv >= BROKEN_FLOOR)
        };
        if !expected {
            r.note = Some(format!("D is not invariant under this copy: ‖[D, U]‖ = {inv:.6e}, required ≥ {BROKEN_FLOOR}"));
        }
        out.push(r);
    }
    Ok(out)
}
