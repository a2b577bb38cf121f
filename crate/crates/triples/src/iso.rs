use serde::{Deserialize, Serialize};

use qcore::HalfInt;
use reps::Cutoff;

use crate::{spectrum, SpectralTriple, SpectrumEntry, TripleError, TripleKind};

/// `λ ↦ r λ + t` carrying one spectrum onto another with multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineMatch {
    pub r: f64,
    pub t: f64,
    /// Number of eigenvalues compared inside the common window.
    pub compared: usize,
}

const ANCHORS: usize = 8;
const MIN_COMPARED: usize = 6;
const TOL: f64 = 1e-8;

fn by_abs(s: &[SpectrumEntry]) -> Vec<SpectrumEntry> {
    let mut v = s.to_vec();
    v.sort_by(|a, b| a.eigenvalue.abs().total_cmp(&b.eigenvalue.abs()).then(a.eigenvalue.total_cmp(&b.eigenvalue)));
    v
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL * a.abs().max(b.abs()).max(1.0)
}

/// Checks a candidate map on the window where both truncated lists live.
fn verify(spec: &[SpectrumEntry], reference: &[SpectrumEntry], r: f64, t: f64) -> Option<usize> {
    let image: Vec<(f64, usize)> = spec.iter().map(|e| (r * e.eigenvalue + t, e.multiplicity)).collect();
    let lo = image.iter().map(|x| x.0).fold(f64::INFINITY, f64::min).max(reference.iter().map(|e| e.eigenvalue).fold(f64::INFINITY, f64::min));
    let hi = image.iter().map(|x| x.0).fold(f64::NEG_INFINITY, f64::max).min(reference.iter().map(|e| e.eigenvalue).fold(f64::NEG_INFINITY, f64::max));
    let inside = |x: f64| x >= lo - TOL * lo.abs().max(1.0) && x <= hi + TOL * hi.abs().max(1.0);
    let mut a: Vec<(f64, usize)> = image.into_iter().filter(|x| inside(x.0)).collect();
    let mut b: Vec<(f64, usize)> = reference.iter().filter(|e| inside(e.eigenvalue)).map(|e| (e.eigenvalue, e.multiplicity)).collect();
    a.sort_by(|x, y| x.0.total_cmp(&y.0));
    b.sort_by(|x, y| x.0.total_cmp(&y.0));
    if a.len() != b.len() || a.len() < MIN_COMPARED {
        return None;
    }
    a.iter().zip(&b).all(|(x, y)| close(x.0, y.0) && x.1 == y.1).then_some(a.len())
}

/// Searches for `r > 0` and `t` with `r·spec + t = reference`, anchoring the
/// map on pairs among the smallest entries of each list and checking it on
/// the common window. Both lists may be truncated.
pub fn isospectral_match(spec: &[SpectrumEntry], reference: &[SpectrumEntry]) -> Option<AffineMatch> {
    let sa = by_abs(spec);
    let ra = by_abs(reference);
    let (sa, ra) = (&sa[..sa.len().min(ANCHORS)], &ra[..ra.len().min(ANCHORS)]);
    let mut best: Option<AffineMatch> = None;
    for (i, a1) in sa.iter().enumerate() {
        for a2 in &sa[i + 1..] {
            for b1 in ra {
                for b2 in ra {
                    if b1.multiplicity != a1.multiplicity || b2.multiplicity != a2.multiplicity {
                        continue;
                    }
                    let da = a2.eigenvalue - a1.eigenvalue;
                    if da.abs() < TOL {
                        continue;
                    }
                    let r = (b2.eigenvalue - b1.eigenvalue) / da;
                    if r <= TOL {
                        continue;
                    }
                    let t = b1.eigenvalue - r * a1.eigenvalue;
                    if let Some(n) = verify(spec, reference, r, t) {
                        let cand = AffineMatch { r, t, compared: n };
                        if best.map_or(true, |b| n > b.compared) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
    }
    best
}

/// Classical Dirac spectrum of the round three-sphere:
/// `±(n + 3/2)` with multiplicity `(n+1)(n+2)` for `n = 0..=n_max`.
pub fn classical_s3_dirac(n_max: usize) -> Vec<SpectrumEntry> {
    let mut out = Vec::with_capacity(2 * n_max + 2);
    for n in 0..=n_max {
        let m = (n + 1) * (n + 2);
        out.push(SpectrumEntry { eigenvalue: -(n as f64 + 1.5), multiplicity: m });
        out.push(SpectrumEntry { eigenvalue: n as f64 + 1.5, multiplicity: m });
    }
    out.sort_by(|a, b| a.eigenvalue.total_cmp(&b.eigenvalue));
    out
}

/// For each `c2`, the affine match of the constrained DLSSV spectrum with
/// the classical one (or `None`).
pub fn dlssv_c2_scan(c1: f64, c2_values: &[f64], big_l: HalfInt, q: f64) -> Result<Vec<(f64, Option<AffineMatch>)>, TripleError> {
    let reference = classical_s3_dirac((4.0 * big_l.to_f64()) as usize + 8);
    c2_values
        .iter()
        .map(|&c2| {
            let t = SpectralTriple::build(TripleKind::dlssv_constrained(c1, c2), Cutoff::Spin(big_l), q)?;
            Ok((c2, isospectral_match(&spectrum(&t.dirac), &reference)))
        })
        .collect()
}
