use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

use reps::{OperatorMatrix, RepScalar};
use uqrep::{action_matrix, twisted_right_operator, ActionFamily, ActionSide, UGen};

use crate::{SpectralTriple, TripleError};

/// Linear conditions imposed on the unknown Dirac operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Constraint {
    /// `[D, e] = [D, f] = 0` for one copy of the symmetry; commuting with `k`
    /// and the Casimir is built into the ansatz.
    Equivariance { family: ActionFamilyTag, right: bool },
    SelfAdjoint,
    /// `Dγ + γD = 0`.
    OddGrading,
    /// `JD = DJ`.
    RealStructure,
    /// `[[D, a], J b J⁻¹] = 0` on the interior for all generators `a`, `b`.
    FirstOrder,
    /// `[[D, a], J b J⁻¹]` in the ideal of infinitesimals: a second stage
    /// keeps the combinations of the exact solutions whose residual, rows
    /// weighted by `q^{-level}`, is small relative to the worst one.
    FirstOrderModG,
}

/// Serializable mirror of [`ActionFamily`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ActionFamilyTag {
    L2,
    Spinor,
    PodlesStandard,
    PodlesEquatorial,
}

impl From<ActionFamilyTag> for ActionFamily {
    fn from(t: ActionFamilyTag) -> Self {
        match t {
            ActionFamilyTag::L2 => ActionFamily::L2,
            ActionFamilyTag::Spinor => ActionFamily::Spinor,
            ActionFamilyTag::PodlesStandard => ActionFamily::PodlesStandard,
            ActionFamilyTag::PodlesEquatorial => ActionFamily::PodlesEquatorial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Gram eigenvalues below `null_tol · λ_max` count as zero.
    pub null_tol: f64,
    /// Singular values below `rank_tol · σ_max` count as zero after projection.
    pub rank_tol: f64,
    /// Weighted first-order Gram eigenvalues below `mod_g_tol · λ_max` are
    /// kept by [`Constraint::FirstOrderModG`].
    pub mod_g_tol: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { null_tol: 1e-14, rank_tol: 1e-8, mod_g_tol: 1e-6 }
    }
}

/// Result of the linear solve.
#[derive(Debug, Clone)]
pub struct DiracSolution {
    /// Real dimension of the full solution space, truncation edge included.
    pub nullity: usize,
    /// Real dimension after restriction to the interior levels, where all
    /// constraints are exact.
    pub dimension: usize,
    /// Number of real unknowns.
    pub unknowns: usize,
    /// Largest Gram eigenvalue counted as zero and smallest one kept, both
    /// relative to the largest.
    pub gap: (f64, f64),
    /// Orthonormal real basis of the interior solution space, as operators.
    pub basis: Vec<OperatorMatrix<f64>>,
    /// `‖P v‖ / ‖v‖` for the triple's own Dirac operator `v`, restricted to the
    /// interior.
    pub overlap: f64,
}

type Key = (u8, usize, usize, bool);

fn push_residual<T: RepScalar>(out: &mut BTreeMap<Key, f64>, tag: u8, m: &OperatorMatrix<T>, mask: Option<&[bool]>) {
    for (r, c, z) in m.entries() {
        if let Some(mask) = mask {
            if !(mask[r] && mask[c]) {
                continue;
            }
        }
        for (im, v) in [(false, z.re.as_f64()), (true, z.im.as_f64())] {
            if v != 0.0 {
                *out.entry((tag, r, c, im)).or_insert(0.0) += v;
            }
        }
    }
}

/// Finds all operators satisfying `constraints` that commute with `k` and
/// preserve the level of the truncated basis of `triple`.
pub fn solve_equivariant_dirac<T: RepScalar>(
    triple: &SpectralTriple<T>,
    constraints: &[Constraint],
    opts: SolverOptions,
) -> Result<DiracSolution, TripleError> {
    let basis = triple.basis().clone();
    let q = triple.rep.q;
    let n = basis.len();
    let one = Complex::new(T::lit(1.0), T::lit(0.0));
    let unit = Complex::new(T::lit(0.0), T::lit(1.0));

    let mut sym_ops: Vec<Vec<OperatorMatrix<T>>> = Vec::new();
    let mut k_diag: Vec<Vec<f64>> = Vec::new();
    for c in constraints {
        if let Constraint::Equivariance { family, right } = *c {
            let fam = family.into();
            let op = |u| {
                if right {
                    twisted_right_operator(&basis, fam, u, q)
                } else {
                    action_matrix(&basis, fam, ActionSide::Left, u, q)
                }
            };
            sym_ops.push(vec![op(UGen::E)?, op(UGen::F)?]);
            let k = op(UGen::K)?;
            k_diag.push((0..n).map(|i| k.get(i, i).re.as_f64()).collect());
        }
    }
    let gamma = triple.gamma.as_ref();
    let real = triple.real.as_ref();
    if constraints.contains(&Constraint::OddGrading) && gamma.is_none() {
        return Err(TripleError::Unsupported("no grading".into()));
    }
    if constraints.contains(&Constraint::RealStructure) && real.is_none() {
        return Err(TripleError::Unsupported("no real structure".into()));
    }
    let gens = triple.rep.generators();
    let twisted: Vec<OperatorMatrix<T>> = match real {
        Some(j) => gens.iter().map(|b| j.conjugate_op(b)).collect(),
        None => gens.to_vec(),
    };
    let fo_mask = triple.rep.interior_mask(1);

    // Unknown positions: same level, same weight for every `k`.
    let labels = basis.labels();
    let mut positions = Vec::new();
    for c in 0..n {
        for r in 0..n {
            let same = labels[r].level() == labels[c].level()
                && k_diag.iter().all(|k| (k[r] - k[c]).abs() <= 1e-12 * k[r].abs().max(1.0));
            if same {
                positions.push((r, c));
            }
        }
    }
    let unknowns = 2 * positions.len();

    let mut columns: Vec<BTreeMap<Key, f64>> = Vec::with_capacity(unknowns);
    for &(r, c) in &positions {
        for z in [one, unit] {
            let d = OperatorMatrix::from_triplets(basis.clone(), basis.clone(), [(r, c, z)]);
            let mut col = BTreeMap::new();
            let mut tag = 0u8;
            for cons in constraints {
                match cons {
                    Constraint::Equivariance { .. } => {}
                    Constraint::SelfAdjoint => push_residual(&mut col, tag, &d.sub(&d.adjoint()), None),
                    Constraint::OddGrading => {
                        let g = gamma.unwrap();
                        push_residual(&mut col, tag, &d.mul(g).add(&g.mul(&d)), None)
                    }
                    Constraint::RealStructure => {
                        let j = real.unwrap();
                        push_residual(&mut col, tag, &j.unitary.mul(&d.conj()).sub(&d.mul(&j.unitary)), None)
                    }
                    Constraint::FirstOrderModG => {}
                    Constraint::FirstOrder => {
                        for a in gens {
                            let da = d.commutator(a);
                            for b in &twisted {
                                push_residual(&mut col, tag, &da.commutator(b), Some(&fo_mask));
                                tag += 1;
                            }
                        }
                    }
                }
                tag += 1;
            }
            for ops in &sym_ops {
                for u in ops {
                    push_residual(&mut col, tag, &d.commutator(u), None);
                    tag += 1;
                }
            }
            columns.push(col);
        }
    }

    let mut rows: BTreeMap<Key, Vec<(usize, f64)>> = BTreeMap::new();
    for (u, col) in columns.iter().enumerate() {
        for (k, v) in col {
            rows.entry(*k).or_default().push((u, *v));
        }
    }
    let mut gram = DMatrix::<f64>::zeros(unknowns, unknowns);
    for row in rows.values() {
        for &(a, x) in row {
            for &(b, y) in row {
                gram[(a, b)] += x * y;
            }
        }
    }
    let eig = gram.symmetric_eigen();
    let lmax = eig.eigenvalues.iter().cloned().fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let mut null = Vec::new();
    let (mut worst_null, mut best_kept) = (0.0f64, f64::INFINITY);
    for (k, &ev) in eig.eigenvalues.iter().enumerate() {
        let rel = ev / lmax;
        if rel <= opts.null_tol {
            worst_null = worst_null.max(rel);
            null.push(eig.eigenvectors.column(k).into_owned());
        } else {
            best_kept = best_kept.min(rel);
        }
    }
    if constraints.contains(&Constraint::FirstOrderModG) && !null.is_empty() {
        null = weighted_first_order_stage(triple, &positions, &twisted, &fo_mask, null, opts.mod_g_tol);
    }
    let nullity = null.len();

    // Restrict to unknowns whose rows and columns are interior.
    let interior: Vec<usize> = (0..unknowns).filter(|&u| {
        let (r, c) = positions[u / 2];
        fo_mask[r] && fo_mask[c]
    }).collect();
    let mut proj = DMatrix::<f64>::zeros(interior.len(), nullity.max(1));
    for (k, v) in null.iter().enumerate() {
        for (row, &u) in interior.iter().enumerate() {
            proj[(row, k)] = v[u];
        }
    }
    let svd = proj.svd(true, false);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let u = svd.u.expect("left singular vectors");
    let mut span = Vec::new();
    for (k, &s) in svd.singular_values.iter().enumerate() {
        if nullity > 0 && s > opts.rank_tol * smax {
            span.push(u.column(k).into_owned());
        }
    }

    let mut own = DVector::<f64>::zeros(interior.len());
    for (row, &u) in interior.iter().enumerate() {
        let (r, c) = positions[u / 2];
        let z = triple.dirac.get(r, c);
        own[row] = if u % 2 == 0 { z.re.as_f64() } else { z.im.as_f64() };
    }
    let norm = own.norm();
    let captured: f64 = span.iter().map(|s| s.dot(&own).powi(2)).sum::<f64>().sqrt();
    let overlap = if norm > 0.0 { captured / norm } else { 0.0 };

    let basis_ops = span
        .iter()
        .map(|s| {
            let trip = interior.iter().enumerate().filter(|(row, _)| s[*row] != 0.0).map(|(row, &u)| {
                let (r, c) = positions[u / 2];
                let z = if u % 2 == 0 { Complex::new(s[row], 0.0) } else { Complex::new(0.0, s[row]) };
                (r, c, z)
            });
            OperatorMatrix::from_triplets(basis.clone(), basis.clone(), trip.collect::<Vec<_>>())
        })
        .collect();

    Ok(DiracSolution {
        nullity,
        dimension: span.len(),
        unknowns,
        gap: (worst_null, if best_kept.is_finite() { best_kept } else { 0.0 }),
        basis: basis_ops,
        overlap,
    })
}

/// Combinations of `null` whose first-order residual, with rows weighted
/// by `q^{-level}`, has Gram eigenvalue at most `tol` times the largest.
fn weighted_first_order_stage<T: RepScalar>(
    triple: &SpectralTriple<T>,
    positions: &[(usize, usize)],
    twisted: &[OperatorMatrix<T>],
    mask: &[bool],
    null: Vec<DVector<f64>>,
    tol: f64,
) -> Vec<DVector<f64>> {
    let basis = triple.basis().clone();
    let q = triple.rep.q.as_f64();
    let weight: Vec<f64> = basis.labels().iter().map(|l| q.powf(-l.level().to_f64())).collect();
    let mut rows: BTreeMap<Key, Vec<(usize, f64)>> = BTreeMap::new();
    for (k, v) in null.iter().enumerate() {
        let trip: Vec<_> = positions
            .iter()
            .enumerate()
            .map(|(p, &(r, c))| (r, c, Complex::new(T::lit(v[2 * p]), T::lit(v[2 * p + 1]))))
            .filter(|t| t.2.norm() != T::lit(0.0))
            .collect();
        let d = OperatorMatrix::from_triplets(basis.clone(), basis.clone(), trip);
        let mut col = BTreeMap::new();
        let mut tag = 0u8;
        for a in triple.rep.generators() {
            let da = d.commutator(a);
            for b in twisted {
                push_residual(&mut col, tag, &da.commutator(b), Some(mask));
                tag += 1;
            }
        }
        for (key, x) in col {
            rows.entry(key).or_default().push((k, x * weight[key.1]));
        }
    }
    let m = null.len();
    let mut gram = DMatrix::<f64>::zeros(m, m);
    for row in rows.values() {
        for &(a, x) in row {
            for &(b, y) in row {
                gram[(a, b)] += x * y;
            }
        }
    }
    let eig = gram.symmetric_eigen();
    let lmax = eig.eigenvalues.iter().cloned().fold(0.0, f64::max);
    (0..m)
        .filter(|&k| lmax == 0.0 || eig.eigenvalues[k] <= tol * lmax)
        .map(|k| {
            let c = eig.eigenvectors.column(k);
            null.iter().zip(c.iter()).fold(DVector::zeros(null[0].len()), |acc, (v, w)| acc + v * *w)
        })
        .collect()
}
