use serde::{Deserialize, Serialize};

use qcore::q_number;
use triples::{SpectralTriple, TripleKind};
use verify::{CheckResult, Verdict};

use crate::{AbsSpectrum, ZetaError};

/// One row of the summability table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummabilityRow {
    pub epsilon: f64,
    /// Sum over the computed spectrum.
    pub partial: f64,
    /// Certified bound on the omitted tail.
    pub tail_bound: f64,
    /// `4 / (1 − q^ε)²`, from `[k]_q ≥ q^{1−k}`.
    pub corrected_bound: f64,
    /// `4 |q − q^{-1}|^ε q^ε / (q^ε − 1)²` as printed.
    pub printed_bound: f64,
    pub verdict: Verdict,
}

impl SummabilityRow {
    /// Interval containing the full trace.
    pub fn trace_interval(&self) -> (f64, f64) {
        (self.partial, self.partial + self.tail_bound)
    }

    pub fn trace(&self) -> f64 {
        self.partial + 0.5 * self.tail_bound
    }
}

/// `4 Σ_{k>K} k r^{k−1}` in closed form.
pub fn geometric_tail(r: f64, big_k: usize) -> f64 {
    let k = big_k as f64;
    4.0 * ((k + 1.0) * r.powf(k) - k * r.powf(k + 1.0)) / (1.0 - r).powi(2)
}

pub fn corrected_bound(q: f64, eps: f64) -> f64 {
    4.0 / (1.0 - q.powf(eps)).powi(2)
}

pub fn printed_bound(q: f64, eps: f64) -> f64 {
    4.0 * (q - 1.0 / q).abs().powf(eps) * q.powf(eps) / (q.powf(eps) - 1.0).powi(2)
}

/// Checks that the positive spectrum is `[k]_q` with multiplicity `4k`,
/// `k = 1..K`, and returns `K`.
fn exponential_levels(spec: &AbsSpectrum, q: f64) -> Result<usize, ZetaError> {
    for (i, e) in spec.entries.iter().enumerate() {
        let k = i + 1;
        let want = q_number(k as f64, q);
        if (e.eigenvalue - want).abs() > 1e-9 * want || e.multiplicity != 4 * k {
            return Err(ZetaError::NotExponential(format!("entry {k}: {e:?}")));
        }
    }
    Ok(spec.entries.len())
}

/// `σ_N / ln N` for `σ_N` the sum of the `N` largest eigenvalues of
/// `|D|^{-ε}`, sampled where complete levels end (`N = 2K(K+1)`).
pub fn sigma_over_log(spec: &AbsSpectrum, eps: f64) -> Vec<(usize, f64)> {
    let mut n = 0usize;
    let mut s = 0.0;
    let mut out = Vec::new();
    for e in &spec.entries {
        n += e.multiplicity;
        s += e.multiplicity as f64 * e.eigenvalue.powf(-eps);
        if n > 1 {
            out.push((n, s / (n as f64).ln()));
        }
    }
    out
}

/// Trace of `|D|^{-ε}` for the standard sphere with a certified tail, the
/// two bounds, and the `σ_N / log N` trend.
pub fn summability_report(triple: &SpectralTriple<f64>, epsilons: &[f64]) -> Result<(Vec<SummabilityRow>, Vec<CheckResult>), ZetaError> {
    let TripleKind::DsStandard { z_re, z_im } = triple.kind else {
        return Err(ZetaError::NotExponential(format!("{} has no exponential spectrum", triple.kind.slug())));
    };
    let q = triple.rep.q;
    let spec = AbsSpectrum::of(triple);
    let zabs = (z_re * z_re + z_im * z_im).sqrt();
    let scaled = AbsSpectrum {
        entries: spec.entries.iter().map(|e| triples::SpectrumEntry { eigenvalue: e.eigenvalue / zabs, ..*e }).collect(),
        kernel_dim: spec.kernel_dim,
    };
    let big_k = exponential_levels(&scaled, q)?;
    let trunc = triple.descriptor().truncation;
    let mut rows = Vec::new();
    let mut checks = Vec::new();
    for &eps in epsilons {
        let partial: f64 = spec.entries.iter().map(|e| e.multiplicity as f64 * e.eigenvalue.powf(-eps)).sum();
        let tail_bound = geometric_tail(q.powf(eps), big_k) * zabs.powf(-eps);
        let cb = corrected_bound(q, eps) * zabs.powf(-eps);
        let pb = printed_bound(q, eps) * zabs.powf(-eps);
        let upper = partial + tail_bound;
        let verdict = if upper > cb {
            Verdict::Fail
        } else if partial > pb {
            Verdict::Flagged
        } else {
            Verdict::Pass
        };
        rows.push(SummabilityRow { epsilon: eps, partial, tail_bound, corrected_bound: cb, printed_bound: pb, verdict });

        let mut c = CheckResult::new(format!("summability.corrected-bound[eps={eps}]"), triple.kind.slug());
        c.truncations = vec![trunc.clone()];
        c.residuals = vec![partial, upper, cb];
        c.tolerance = tail_bound;
        c.verdict = Verdict::from_bool(upper <= cb);
        checks.push(c);

        let mut p = CheckResult::new(format!("summability.printed-bound[eps={eps}]"), triple.kind.slug());
        p.truncations = vec![trunc.clone()];
        p.residuals = vec![partial, pb];
        p.tolerance = tail_bound;
        p.verdict = if partial > pb { Verdict::Flagged } else { Verdict::Pass };
        if partial > pb {
            p.note = Some(format!("trace {partial:.6} exceeds the printed bound {pb:.6}; the printed derivation drops a factor (1 - q^(2k))^(-eps) >= 1"));
        }
        checks.push(p);

        let curve = sigma_over_log(&spec, eps);
        let later = &curve[curve.len() / 2..];
        let decreasing = later.windows(2).all(|w| w[1].1 < w[0].1);
        let mut d = CheckResult::new(format!("summability.sigma-over-log[eps={eps}]"), triple.kind.slug());
        d.truncations = vec![trunc.clone()];
        d.residuals = later.iter().map(|x| x.1).collect();
        d.tolerance = 0.0;
        d.verdict = Verdict::from_bool(decreasing);
        d.note = Some("sigma_N / ln N at complete levels, later half of the samples".into());
        checks.push(d);
    }
    Ok((rows, checks))
}
