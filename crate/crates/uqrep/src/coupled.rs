use std::sync::Arc;

use num_complex::Complex;
use qcore::{spin_half_coupling, HalfInt, Scalar};

use crate::{Basis, BasisLabel, Family, OperatorMatrix};

fn re<T: Scalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// Orthogonal change of basis from `L² ⊗ C²` (product labels) to the coupled
/// spinor basis, coupling the first index `i` with `C²`:
///
/// `|j μ n ↓> = C_{jμ} ε_{j-½, μ+½, n} ⊗ e_- + S_{jμ} ε_{j-½, μ-½, n} ⊗ e_+`,
/// `|j μ n ↑> = -S_{j+1,μ} ε_{j+½, μ+½, n} ⊗ e_- + C_{j+1,μ} ε_{j+½, μ-½, n} ⊗ e_+`.
pub fn spinor_change_of_basis<T: Scalar>(spinor: &Arc<Basis>, prod: &Arc<Basis>, q: T) -> OperatorMatrix<T> {
    assert_eq!(spinor.family, Family::Spinor);
    assert_eq!(prod.family, Family::L2Spin);
    let half = HalfInt::HALF;
    let mut trip = Vec::new();
    for (r, lab) in spinor.labels().iter().enumerate() {
        let BasisLabel::Spinor { j, up, mu, n } = *lab else { unreachable!() };
        let (jj, row, l) = if up { (j + HalfInt::ONE, 0, j + half) } else { (j, 1, j - half) };
        let blk = spin_half_coupling(jj, mu, q, false).expect("valid coupling label");
        for (col, (i, s)) in [(mu + half, -half), (mu - half, half)].into_iter().enumerate() {
            if let Some(c) = prod.index_of(&BasisLabel::L2Spin { l, i, j: n, s }) {
                trip.push((r, c, re(blk[row][col])));
            }
        }
    }
    OperatorMatrix::from_triplets(spinor.clone(), prod.clone(), trip)
}

/// Orthogonal change of basis from `C² ⊗ L²` to the eigenbasis `v^±` of the
/// Bibikov–Kulish operator. The coupling is on the second index `j` and uses
/// the `q -> 1/q` coefficients of the opposite tensor order:
///
/// `v^+_{ℓ,i,μ} = C' e_- ⊗ ε_{ℓ,i,μ+½} + S' e_+ ⊗ ε_{ℓ,i,μ-½}`,
/// `v^-_{ℓ,i,μ} = -S' e_- ⊗ ε_{ℓ,i,μ+½} + C' e_+ ⊗ ε_{ℓ,i,μ-½}`,
/// with `(C', S')` the pair at `(ℓ + ½, μ)` evaluated at `1/q`.
pub fn bk_change_of_basis<T: Scalar>(bk: &Arc<Basis>, prod: &Arc<Basis>, q: T) -> OperatorMatrix<T> {
    assert_eq!(bk.family, Family::Bk);
    assert_eq!(prod.family, Family::L2Spin);
    let half = HalfInt::HALF;
    let mut trip = Vec::new();
    for (r, lab) in bk.labels().iter().enumerate() {
        let BasisLabel::Bk { l, i, plus, mu } = *lab else { unreachable!() };
        let blk = spin_half_coupling(l + half, mu, q, true).expect("valid coupling label");
        let row = if plus { 1 } else { 0 };
        for (col, (j, s)) in [(mu + half, -half), (mu - half, half)].into_iter().enumerate() {
            if let Some(c) = prod.index_of(&BasisLabel::L2Spin { l, i, j, s }) {
                trip.push((r, c, re(blk[row][col])));
            }
        }
    }
    OperatorMatrix::from_triplets(bk.clone(), prod.clone(), trip)
}

/// `X ⊗ 1` on `L² ⊗ C²` for an operator `X` on `L²`.
pub fn lift_to_spin<T: Scalar>(x: &OperatorMatrix<T>, prod: &Arc<Basis>) -> OperatorMatrix<T> {
    let rows = x.rows();
    let cols = x.cols();
    let mut trip = Vec::with_capacity(2 * x.nnz());
    for (r, c, v) in x.entries() {
        let (BasisLabel::L2 { l: lr, i: ir, j: jr }, BasisLabel::L2 { l: lc, i: ic, j: jc }) = (rows.label(r), cols.label(c)) else {
            panic!("lift_to_spin expects an L² operator");
        };
        for s in [-HalfInt::HALF, HalfInt::HALF] {
            let rr = prod.index_of(&BasisLabel::L2Spin { l: lr, i: ir, j: jr, s });
            let cc = prod.index_of(&BasisLabel::L2Spin { l: lc, i: ic, j: jc, s });
            if let (Some(rr), Some(cc)) = (rr, cc) {
                trip.push((rr, cc, v));
            }
        }
    }
    OperatorMatrix::from_triplets(prod.clone(), prod.clone(), trip)
}

/// `W X W†` for an orthogonal change of basis `W`.
pub fn conjugate_by<T: Scalar>(w: &OperatorMatrix<T>, x: &OperatorMatrix<T>) -> OperatorMatrix<T> {
    w.mul(x).mul(&w.adjoint())
}
