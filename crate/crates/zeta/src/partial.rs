use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use reps::RepScalar;
use triples::{abs_spectrum, SpectralTriple, SpectrumEntry};

/// Below this, an eigenvalue of `|D|` counts as zero.
pub const KERNEL_TOL: f64 = 1e-12;

/// Spectrum of `|D|` with the kernel split off.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AbsSpectrum {
    /// Positive eigenvalues in increasing order.
    pub entries: Vec<SpectrumEntry>,
    pub kernel_dim: usize,
}

impl AbsSpectrum {
    pub fn from_entries(all: &[SpectrumEntry]) -> Self {
        let mut kernel_dim = 0;
        let mut entries = Vec::new();
        for e in all {
            if e.eigenvalue.abs() <= KERNEL_TOL {
                kernel_dim += e.multiplicity;
            } else {
                entries.push(SpectrumEntry { eigenvalue: e.eigenvalue.abs(), multiplicity: e.multiplicity });
            }
        }
        entries.sort_by(|a, b| a.eigenvalue.total_cmp(&b.eigenvalue));
        // merge |λ| = |-λ|
        let mut merged: Vec<SpectrumEntry> = Vec::new();
        for e in entries {
            match merged.last_mut() {
                Some(m) if (m.eigenvalue - e.eigenvalue).abs() <= 1e-9 * e.eigenvalue.max(1.0) => m.multiplicity += e.multiplicity,
                _ => merged.push(e),
            }
        }
        AbsSpectrum { entries: merged, kernel_dim }
    }

    pub fn of<T: RepScalar>(triple: &SpectralTriple<T>) -> Self {
        Self::from_entries(&abs_spectrum(&triple.dirac))
    }

    /// Total multiplicity, kernel included.
    pub fn dimension(&self) -> usize {
        self.kernel_dim + self.entries.iter().map(|e| e.multiplicity).sum::<usize>()
    }
}

/// `Σ mult · λ^{-z}` over the positive part of the spectrum.
pub fn zeta_partial(spec: &AbsSpectrum, z: Complex64) -> Complex64 {
    spec.entries.iter().map(|e| e.multiplicity as f64 * Complex64::new(e.eigenvalue, 0.0).powc(-z)).sum()
}

/// `(Λ, Σ_{λ ≤ Λ} mult · λ^{-z})` at every distinct eigenvalue, for real `z`.
pub fn cumulative_sums(spec: &AbsSpectrum, z: f64) -> Vec<(f64, f64)> {
    let mut s = 0.0;
    spec.entries
        .iter()
        .map(|e| {
            s += e.multiplicity as f64 * e.eigenvalue.powf(-z);
            (e.eigenvalue, s)
        })
        .collect()
}

/// Growth exponent of the partial sums in `Λ`: least-squares slope of
/// `ln(σ(Λ) − σ(Λ/2))` against `ln Λ` over the upper half of the octaves.
/// About `p − z` for a leading pole `p`, negative when the series converges.
pub fn growth_exponent(spec: &AbsSpectrum, z: f64) -> Option<f64> {
    let sums = cumulative_sums(spec, z);
    let top = sums.last()?.0;
    let at = |x: f64| sums.iter().take_while(|p| p.0 <= x * (1.0 + 1e-12)).last().map_or(0.0, |p| p.1);
    let mut pts = Vec::new();
    let mut lam = top;
    while lam >= 4.0 * sums[0].0 {
        let d = at(lam) - at(lam / 2.0);
        if d > 0.0 {
            pts.push((lam.ln(), d.ln()));
        }
        lam /= 2.0_f64.sqrt();
    }
    pts.truncate((pts.len() + 1) / 2);
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some(sxy / sxx)
}

/// `|ζ|` data on a rectangular grid of complex `z`, for plotting.
pub fn zeta_grid(spec: &AbsSpectrum, re: &[f64], im: &[f64]) -> Vec<(Complex64, Complex64)> {
    let mut out = Vec::with_capacity(re.len() * im.len());
    for &x in re {
        for &y in im {
            let z = Complex64::new(x, y);
            out.push((z, zeta_partial(spec, z)));
        }
    }
    out
}
