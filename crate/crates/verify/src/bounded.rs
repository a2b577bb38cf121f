use ncalg::{embed_podles, AlgebraId, AlgebraPreset, FloatCtx, HopfSymbol, NCPoly, Side};
use num_complex::Complex;
use qcore::HalfInt;
use reps::{BasisLabel, Cutoff, RepScalar, Representation};
use triples::{SpectralTriple, TripleKind};

use crate::norms::{interior_norm, COMPOSITE_TOL};
use crate::{CheckResult, Verdict, VerifyError};

/// Relative change allowed between the last two truncations.
pub const CAUCHY_TOL: f64 = 0.01;
/// Relative deviation allowed from the expected growth ratio.
pub const GROWTH_TOL: f64 = 0.10;

/// Interior operator norm of `[D, π(x)]` at one truncation.
pub fn commutator_norm<T: RepScalar>(triple: &SpectralTriple<T>, x: &NCPoly<T>) -> f64 {
    let xm = triple.rep.evaluate(x).matrix;
    let mask = triple.rep.interior_mask(x.degree().max(1));
    interior_norm(&triple.dirac.commutator(&xm), &mask)
}

/// Norms of `[D, π(x)]` over a list of truncations. BK is expected to grow
/// by `q^{-2}` per unit of `L`; every other triple to stabilize.
pub fn check_commutator_bounded<T: RepScalar>(kind: TripleKind, x: &NCPoly<T>, label: &str, cutoffs: &[Cutoff], q: T) -> Result<CheckResult, VerifyError> {
    let mut out = CheckResult::new(format!("bounded[{label}]"), kind.slug());
    for &c in cutoffs {
        let t = SpectralTriple::build(kind, c, q)?;
        out.truncations.push(t.descriptor().truncation);
        out.residuals.push(commutator_norm(&t, x));
    }
    let r = &out.residuals;
    let n = r.len();
    if n < 2 {
        return Err(VerifyError::Input("need at least two truncations".into()));
    }
    if kind == TripleKind::Bk {
        let target = q.as_f64().powi(-2);
        let ratios: Vec<f64> = r.windows(2).map(|w| w[1] / w[0]).collect();
        out.tolerance = GROWTH_TOL;
        out.verdict = Verdict::from_bool(ratios.iter().all(|x| (x / target - 1.0).abs() <= GROWTH_TOL));
        out.note = Some(format!("unbounded: consecutive ratios {ratios:.6?}, q^-2 = {target}"));
    } else {
        let change = if r[n - 1] == 0.0 { 0.0 } else { (r[n - 1] - r[n - 2]).abs() / r[n - 1] };
        out.tolerance = CAUCHY_TOL;
        out.verdict = Verdict::from_bool(change <= CAUCHY_TOL);
        out.note = Some(format!("bounded: relative change over the last two truncations {change:.3e}"));
    }
    Ok(out)
}

fn sphere_to_l2(l: HalfInt, s: i8, m: HalfInt) -> BasisLabel {
    BasisLabel::L2 { l, i: m, j: HalfInt::from_twice(-(s as i32)) }
}

/// Compares `[D, π(h)]` on the standard sphere with the block form
/// `[[0, c_e π(h ◁ e)], [c_f π(h ◁ f), 0]]`, computed by acting on the
/// image of `h` in SU_q(2) and restricting the left regular representation
/// to the two line bundles. Returns the worst interior residual for the
/// printed constants `c_e = q^{1/2}`, `c_f = q^{-1/2}`.
pub fn check_dh_formula<T: RepScalar>(triple: &SpectralTriple<T>) -> Result<CheckResult, VerifyError> {
    let TripleKind::DsStandard { z_re, z_im } = triple.kind else {
        return Err(VerifyError::Input("the block formula is for the standard sphere".into()));
    };
    if (z_re, z_im) != (1.0, 0.0) {
        return Err(VerifyError::Input("the block formula holds for z = 1".into()));
    }
    let q = triple.rep.q;
    let ctx = FloatCtx::new(q);
    let su = AlgebraPreset::new(AlgebraId::SUq2, ctx);
    let pod = triple.rep.preset();
    let big_l = triple.basis().max_spin();
    let l2 = Representation::left_regular(big_l, q)?;
    let mask = triple.rep.interior_mask(1);
    let ce = Complex::new(q.sqrt(), T::lit(0.0));
    let cf = Complex::new(q.sqrt().recip(), T::lit(0.0));
    let mut worst = 0.0f64;
    for g in 0..pod.num_generators() as u8 {
        let h = embed_podles(&su, &pod, &NCPoly::generator(g))?;
        let he = l2.evaluate(&su.act_side(Side::Right, &[HopfSymbol::E], &h)?).matrix;
        let hf = l2.evaluate(&su.act_side(Side::Right, &[HopfSymbol::F], &h)?).matrix;
        let comm = triple.dirac.commutator(triple.rep.generator(g));
        let labels = triple.basis().labels();
        for (c, cl) in labels.iter().enumerate() {
            for (r, rl) in labels.iter().enumerate() {
                if !(mask[r] && mask[c]) {
                    continue;
                }
                let (BasisLabel::Podles { l: lc, s: sc, m: mc }, BasisLabel::Podles { l: lr, s: sr, m: mr }) = (*cl, *rl) else {
                    unreachable!()
                };
                let (lr2, lc2) = (sphere_to_l2(lr, sr, mr), sphere_to_l2(lc, sc, mc));
                let want = match (sc, sr) {
                    (1, -1) => he.get_labels(&lr2, &lc2) * ce,
                    (-1, 1) => hf.get_labels(&lr2, &lc2) * cf,
                    _ => Complex::new(T::lit(0.0), T::lit(0.0)),
                };
                worst = worst.max((comm.get(r, c) - want).norm().as_f64());
            }
        }
    }
    let mut out = CheckResult::new("bounded.block-formula", triple.kind.slug());
    out.truncations = vec![triple.descriptor().truncation];
    out.residuals = vec![worst];
    out.tolerance = COMPOSITE_TOL;
    out.verdict = Verdict::from_bool(worst < COMPOSITE_TOL);
    Ok(out)
}

