use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use reps::Cutoff;
use triples::{SpectrumEntry, TripleKind};

use crate::{AbsSpectrum, ZetaError};

/// Eigenvalues `|λ(n)| = scale · (n + offset)` for `n = start..=end` with
/// multiplicity `Σ_i coeffs[i] n^i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearSeries {
    pub scale: Rational64,
    pub offset: Rational64,
    pub start: i64,
    pub end: i64,
    pub coeffs: Vec<i64>,
}

impl LinearSeries {
    pub fn eigenvalue(&self, n: i64) -> Rational64 {
        self.scale * (Rational64::from(n) + self.offset)
    }

    pub fn multiplicity(&self, n: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |s, c| s * n + c)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum MultiplicityLaw {
    Polynomial(Vec<LinearSeries>),
    /// Eigenvalues growing like `base^{-n}`; no pole set is computed.
    Exponential { base: f64 },
}

fn ratio(x: f64) -> Result<Rational64, ZetaError> {
    Rational64::approximate_float(x)
        .filter(|r| (*r.numer() as f64 / *r.denom() as f64 - x).abs() < 1e-12 && *r.denom() <= 1000)
        .ok_or_else(|| ZetaError::Unsupported(format!("{x} is not a simple rational")))
}

/// Multiplicity law of a triple at a truncation.
pub fn multiplicity_law(kind: &TripleKind, cutoff: Cutoff) -> Result<MultiplicityLaw, ZetaError> {
    let half_l = |c: Cutoff| match c {
        Cutoff::Spin(l) => Ok(l.twice() as i64),
        _ => Err(ZetaError::Unsupported(format!("{c:?} is not a spin cutoff"))),
    };
    let one = Rational64::from(1);
    Ok(match *kind {
        TripleKind::Cp => {
            // |D| = ℓ = n/2, multiplicity (n+1)²
            let n_max = half_l(cutoff)?;
            MultiplicityLaw::Polynomial(vec![LinearSeries { scale: Rational64::new(1, 2), offset: Rational64::zero(), start: 1, end: n_max, coeffs: vec![1, 2, 1] }])
        }
        TripleKind::DlpsEquatorial => {
            // |D| = k = ℓ + 1/2, multiplicity 4k
            let k_max = (half_l(cutoff)? + 1) / 2;
            MultiplicityLaw::Polynomial(vec![LinearSeries { scale: one, offset: Rational64::zero(), start: 1, end: k_max, coeffs: vec![0, 4] }])
        }
        TripleKind::Dlssv { c1_up, c2_up, c1_dn, c2_dn } => {
            // n = 2j; up: (n+1)(n+2) for n ≤ 2L-1, down: n(n+1) for 1 ≤ n ≤ 2L+1
            let n2 = half_l(cutoff)?;
            let series = |c1: f64, c2: f64, start: i64, end: i64, coeffs: Vec<i64>| -> Result<LinearSeries, ZetaError> {
                let (c1, c2) = (ratio(c1)?, ratio(c2)?);
                if c1.is_zero() {
                    return Err(ZetaError::Unsupported("constant eigenvalue sequence".into()));
                }
                let sign = if (c1 * Rational64::from(start) / 2 + c2).is_negative() { -one } else { one };
                Ok(LinearSeries { scale: sign * c1 / 2, offset: c2 * 2 / c1, start, end, coeffs })
            };
            MultiplicityLaw::Polynomial(vec![series(c1_up, c2_up, 0, n2 - 1, vec![2, 3, 1])?, series(c1_dn, c2_dn, 1, n2 + 1, vec![0, 1, 1])?])
        }
        TripleKind::CpGeneric { .. } => {
            let n_max = match cutoff {
                Cutoff::Count(n) => n as i64,
                c => return Err(ZetaError::Unsupported(format!("{c:?} is not a count cutoff"))),
            };
            MultiplicityLaw::Polynomial(vec![LinearSeries { scale: one, offset: Rational64::zero(), start: 1, end: n_max, coeffs: vec![2] }])
        }
        TripleKind::CpShift => {
            // |D| = i + |j| = m has 2m + 1 labels
            let m_max = match cutoff {
                Cutoff::Shift { ni, nj } => ni.min(nj) as i64,
                c => return Err(ZetaError::Unsupported(format!("{c:?} is not a shift cutoff"))),
            };
            MultiplicityLaw::Polynomial(vec![LinearSeries { scale: one, offset: Rational64::zero(), start: 1, end: m_max, coeffs: vec![1, 2] }])
        }
        TripleKind::Bk | TripleKind::DsStandard { .. } => MultiplicityLaw::Exponential { base: f64::NAN },
        TripleKind::GoswamiAbs => return Err(ZetaError::Unsupported("the absolute-value operator is used for boundedness only".into())),
    })
}

/// Entries predicted by a polynomial law, merged by eigenvalue.
pub fn law_entries(law: &MultiplicityLaw) -> Result<Vec<SpectrumEntry>, ZetaError> {
    let MultiplicityLaw::Polynomial(series) = law else {
        return Err(ZetaError::NotPolynomial);
    };
    let mut pts: Vec<(Rational64, i64)> = Vec::new();
    for s in series {
        for n in s.start..=s.end {
            let m = s.multiplicity(n);
            let lam = s.eigenvalue(n).abs();
            if m != 0 && !lam.is_zero() {
                pts.push((lam, m));
            }
        }
    }
    pts.sort();
    let mut out: Vec<(Rational64, i64)> = Vec::new();
    for (l, m) in pts {
        match out.last_mut() {
            Some(last) if last.0 == l => last.1 += m,
            _ => out.push((l, m)),
        }
    }
    Ok(out.into_iter().map(|(l, m)| SpectrumEntry { eigenvalue: *l.numer() as f64 / *l.denom() as f64, multiplicity: m as usize }).collect())
}

/// Checks the law entry by entry against a computed spectrum of `|D|`, up
/// to the largest eigenvalue the law covers. Above it a truncation may hold
/// incomplete levels.
pub fn validate_law(law: &MultiplicityLaw, spec: &AbsSpectrum) -> Result<(), ZetaError> {
    let want = law_entries(law)?;
    let top = want.last().map_or(0.0, |e| e.eigenvalue) * (1.0 + 1e-9);
    let got: Vec<_> = spec.entries.iter().filter(|e| e.eigenvalue <= top).collect();
    if want.len() != got.len() {
        return Err(ZetaError::LawMismatch(format!("{} law entries, {} computed", want.len(), got.len())));
    }
    for (w, g) in want.iter().zip(got) {
        if (w.eigenvalue - g.eigenvalue).abs() > 1e-9 * w.eigenvalue.max(1.0) || w.multiplicity != g.multiplicity {
            return Err(ZetaError::LawMismatch(format!("law {w:?}, computed {g:?}")));
        }
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Real poles of `Σ mult · |λ|^{-z}`. Each series is rewritten in powers of
/// `u = n + offset`, so that it becomes `scale^{-z} Σ_k c_k Σ_u u^{-(z-k)}`,
/// a combination of Hurwitz zeta functions with a simple pole at `z = k + 1`
/// whenever `c_k ≠ 0`. Series on the same lattice are added first, since
/// their starting points only change entire terms.
pub fn pole_set(law: &MultiplicityLaw) -> Result<Vec<Rational64>, ZetaError> {
    let MultiplicityLaw::Polynomial(series) = law else {
        return Err(ZetaError::NotPolynomial);
    };
    // lattice key: (|scale|, offset mod 1)
    let mut groups: Vec<((Rational64, Rational64), Vec<Rational64>)> = Vec::new();
    for s in series {
        let off = s.offset - s.offset.floor();
        let key = (s.scale.abs(), off);
        // multiplicity in powers of u = n + offset = λ / scale: n = u - offset
        let deg = s.coeffs.len();
        let mut c = vec![Rational64::zero(); deg];
        for (i, &a) in s.coeffs.iter().enumerate() {
            for k in 0..=i {
                let mut term = Rational64::from(a * binomial(i, k));
                for _ in 0..(i - k) {
                    term *= -s.offset;
                }
                c[k] += term;
            }
        }
        match groups.iter_mut().find(|g| g.0 == key) {
            Some(g) => {
                if g.1.len() < c.len() {
                    g.1.resize(c.len(), Rational64::zero());
                }
                for (x, y) in g.1.iter_mut().zip(&c) {
                    *x += *y;
                }
            }
            None => groups.push((key, c)),
        }
    }
    let mut poles: Vec<Rational64> = groups.iter().flat_map(|g| g.1.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| Rational64::from(k as i64 + 1))).collect();
    poles.sort();
    poles.dedup();
    Ok(poles)
}
