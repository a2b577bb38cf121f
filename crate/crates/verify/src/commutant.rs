use ncalg::NCPoly;
use reps::{OperatorMatrix, RepScalar};
use triples::{SpectralTriple, TripleKind};

use crate::norms::{interior_residual, log_slope, tail_norms, EXACT_TOL, EXPONENT_TOL};
use crate::{CheckResult, Verdict, VerifyError};

/// Unweighted residual below which a 𝒢-triple would count as exact.
pub const NONTRIVIAL_FLOOR: f64 = 1e-3;

/// How a triple is expected to meet the commutant and first-order conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Exact,
    /// Up to the ideal generated by `q^j`.
    Infinitesimal,
}

pub fn expectation(kind: &TripleKind) -> Option<Expectation> {
    match kind {
        TripleKind::DsStandard { .. } => Some(Expectation::Exact),
        TripleKind::Dlssv { .. } | TripleKind::DlpsEquatorial => Some(Expectation::Infinitesimal),
        _ => None,
    }
}

fn twisted<T: RepScalar>(triple: &SpectralTriple<T>, x: &NCPoly<T>) -> Result<OperatorMatrix<T>, VerifyError> {
    let j = triple.real.as_ref().ok_or_else(|| VerifyError::Missing(format!("{} has no real structure", triple.kind.slug())))?;
    Ok(j.conjugate_op(&triple.rep.evaluate(x).matrix))
}

/// Judges `X` on the interior for `letters` generator letters.
pub fn judge<T: RepScalar>(triple: &SpectralTriple<T>, id: String, x: &OperatorMatrix<T>, letters: usize) -> CheckResult {
    let mask = triple.rep.interior_mask(letters);
    let desc = triple.descriptor();
    let mut out = CheckResult::new(id, desc.triple.slug());
    out.truncations = vec![desc.truncation];
    let full = interior_residual(x, &mask);
    match expectation(&triple.kind).unwrap_or(Expectation::Exact) {
        Expectation::Exact => {
            out.residuals = vec![full];
            out.tolerance = EXACT_TOL;
            out.verdict = Verdict::from_bool(full < EXACT_TOL);
        }
        Expectation::Infinitesimal => {
            out.tolerance = EXPONENT_TOL;
            if full == 0.0 {
                out.residuals = vec![0.0];
                return out.with_note("vanishes identically on the interior");
            }
            let big_l = triple.basis().max_spin().to_f64();
            let tails = tail_norms(x, triple.basis(), &mask, 2.0, big_l - 2.0);
            out.residuals = tails.iter().map(|t| t.1).collect();
            let slope = log_slope(&tails);
            out.decay_exponent = slope;
            let lq = triple.rep.q.as_f64().ln();
            let ratio = slope.map(|s| s / lq);
            let within = ratio.is_some_and(|r| (r - 1.0).abs() <= EXPONENT_TOL);
            out.verdict = Verdict::from_bool(within && full > NONTRIVIAL_FLOOR);
            out.note = Some(match ratio {
                Some(r) => format!("levels {:.1}..{:.1}; slope/ln q = {r:.4}; unweighted norm {full:.6e}", tails[0].0, tails[tails.len() - 1].0),
                None => "too few levels for a fit".into(),
            });
        }
    }
    out
}

fn degree<T: RepScalar>(p: &NCPoly<T>) -> usize {
    p.degree()
}

/// `[J x J⁻¹, y]` on the interior.
pub fn check_commutant<T: RepScalar>(triple: &SpectralTriple<T>, x: &NCPoly<T>, y: &NCPoly<T>, label: &str) -> Result<CheckResult, VerifyError> {
    let jx = twisted(triple, x)?;
    let ym = triple.rep.evaluate(y).matrix;
    Ok(judge(triple, format!("commutant[{label}]"), &jx.commutator(&ym), degree(x) + degree(y)))
}

/// `[J x J⁻¹, [D, y]]` on the interior.
pub fn check_first_order<T: RepScalar>(triple: &SpectralTriple<T>, x: &NCPoly<T>, y: &NCPoly<T>, label: &str) -> Result<CheckResult, VerifyError> {
    let jx = twisted(triple, x)?;
    let dy = triple.dirac.commutator(&triple.rep.evaluate(y).matrix);
    Ok(judge(triple, format!("first-order[{label}]"), &jx.commutator(&dy), degree(x) + degree(y)))
}

/// Both checks over all ordered pairs of generators.
pub fn commutant_suite<T: RepScalar>(triple: &SpectralTriple<T>) -> Result<Vec<CheckResult>, VerifyError> {
    let alg = triple.rep.preset();
    let names: Vec<String> = (0..alg.num_generators()).map(|g| alg.word_to_string(&[g as u8])).collect();
    let mut out = Vec::new();
    for (gx, nx) in names.iter().enumerate() {
        for (gy, ny) in names.iter().enumerate() {
            let (x, y) = (NCPoly::generator(gx as u8), NCPoly::generator(gy as u8));
            out.push(check_commutant(triple, &x, &y, &format!("{nx},{ny}"))?);
            out.push(check_first_order(triple, &x, &y, &format!("{nx},{ny}"))?);
        }
    }
    Ok(out)
}
