use nalgebra::DMatrix;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

use reps::{OperatorMatrix, RepScalar};

/// One eigenvalue with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub eigenvalue: f64,
    pub multiplicity: usize,
}

/// Relative tolerance under which two eigenvalues count as equal.
const GROUP_TOL: f64 = 1e-9;

fn components<T: RepScalar>(d: &OperatorMatrix<T>) -> Vec<Vec<usize>> {
    let n = d.nrows();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (r, c, _) in d.entries() {
        let (a, b) = (find(&mut parent, r), find(&mut parent, c));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for k in 0..n {
        let root = find(&mut parent, k);
        groups.entry(root).or_default().push(k);
    }
    groups.into_values().collect()
}

/// Eigenvalues of a self-adjoint operator, block by block along the
/// connected components of its sparsity graph. Computed in double precision.
pub fn eigenvalues<T: RepScalar>(d: &OperatorMatrix<T>) -> Vec<f64> {
    let mut out = Vec::with_capacity(d.nrows());
    for comp in components(d) {
        if comp.len() == 1 {
            out.push(d.get(comp[0], comp[0]).re.as_f64());
            continue;
        }
        let m = DMatrix::from_fn(comp.len(), comp.len(), |a, b| {
            let z = d.get(comp[a], comp[b]);
            Complex::new(z.re.as_f64(), z.im.as_f64())
        });
        out.extend(m.symmetric_eigenvalues().iter().copied());
    }
    out
}

/// Sorts and merges values that agree to a relative tolerance.
pub fn group_eigenvalues(mut vals: Vec<f64>) -> Vec<SpectrumEntry> {
    vals.sort_by(f64::total_cmp);
    let mut out: Vec<SpectrumEntry> = Vec::new();
    let mut sum = 0.0;
    for v in vals {
        match out.last_mut() {
            Some(e) if (v - e.eigenvalue).abs() <= GROUP_TOL * v.abs().max(1.0) => {
                sum += v;
                e.multiplicity += 1;
                e.eigenvalue = sum / e.multiplicity as f64;
            }
            _ => {
                sum = v;
                out.push(SpectrumEntry { eigenvalue: v, multiplicity: 1 });
            }
        }
    }
    out
}

pub fn spectrum<T: RepScalar>(d: &OperatorMatrix<T>) -> Vec<SpectrumEntry> {
    group_eigenvalues(eigenvalues(d))
}

/// Spectrum of `|D|`.
pub fn abs_spectrum<T: RepScalar>(d: &OperatorMatrix<T>) -> Vec<SpectrumEntry> {
    group_eigenvalues(eigenvalues(d).into_iter().map(f64::abs).collect())
}
