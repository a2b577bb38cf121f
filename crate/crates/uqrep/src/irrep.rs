use std::sync::Arc;

use num_complex::Complex;
use qcore::{q_number_half, HalfInt, Scalar};

use crate::{Basis, BasisLabel, OperatorMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UGen {
    E,
    F,
    K,
    KInv,
}

impl UGen {
    pub const ALL: [UGen; 4] = [UGen::E, UGen::F, UGen::K, UGen::KInv];

    /// `e* = f`, `k* = k`.
    pub fn star(self) -> UGen {
        match self {
            UGen::E => UGen::F,
            UGen::F => UGen::E,
            g => g,
        }
    }
}

/// Image of `|ℓ, m>` under a generator in the spin-ℓ irrep:
/// `f` raises `m`, `e` lowers it, `k = q^m`.
pub fn sigma_entry<T: Scalar>(u: UGen, l: HalfInt, m: HalfInt, q: T) -> Option<(HalfInt, T)> {
    let one = HalfInt::ONE;
    match u {
        UGen::K => Some((m, q.powf(T::lit(m.to_f64())))),
        UGen::KInv => Some((m, q.powf(T::lit(-m.to_f64())))),
        UGen::F if m < l => Some((m + one, (q_number_half(l - m, q) * q_number_half(l + m + one, q)).sqrt())),
        UGen::E if m > -l => Some((m - one, (q_number_half(l - m + one, q) * q_number_half(l + m, q)).sqrt())),
        _ => None,
    }
}

/// The spin-ℓ irrep in the orthonormal `|ℓ, m>` basis, `m` ascending.
#[derive(Debug, Clone)]
pub struct IrrepBlock<T> {
    pub ell: HalfInt,
    pub e_mat: OperatorMatrix<T>,
    pub f_mat: OperatorMatrix<T>,
    pub k_mat: OperatorMatrix<T>,
    pub k_inv_mat: OperatorMatrix<T>,
}

pub fn irrep<T: Scalar>(ell: HalfInt, q: T) -> IrrepBlock<T> {
    let b = Arc::new(Basis::irrep(ell));
    let mat = |u: UGen| {
        OperatorMatrix::from_columns(b.clone(), b.clone(), |lab| match *lab {
            BasisLabel::Weight { l, m } => sigma_entry(u, l, m, q)
                .map(|(m2, v)| vec![(BasisLabel::Weight { l, m: m2 }, Complex::new(v, T::zero()))])
                .unwrap_or_default(),
            _ => unreachable!(),
        })
    };
    IrrepBlock { ell, e_mat: mat(UGen::E), f_mat: mat(UGen::F), k_mat: mat(UGen::K), k_inv_mat: mat(UGen::KInv) }
}

impl<T: Scalar> IrrepBlock<T> {
    pub fn get(&self, u: UGen) -> &OperatorMatrix<T> {
        match u {
            UGen::E => &self.e_mat,
            UGen::F => &self.f_mat,
            UGen::K => &self.k_mat,
            UGen::KInv => &self.k_inv_mat,
        }
    }

    /// Largest residual among `ek = q ke`, `kf = q fk`,
    /// `k² - k⁻² = (q - q⁻¹)(fe - ef)`, `e† = f`.
    pub fn relation_residual(&self, q: T) -> T {
        let (e, f, k, ki) = (&self.e_mat, &self.f_mat, &self.k_mat, &self.k_inv_mat);
        let r1 = e.mul(k).sub(&k.mul(e).scale_real(q)).max_abs();
        let r2 = k.mul(f).sub(&f.mul(k).scale_real(q)).max_abs();
        let lhs = k.mul(k).sub(&ki.mul(ki));
        let rhs = f.mul(e).sub(&e.mul(f)).scale_real(q - q.recip());
        let r3 = lhs.sub(&rhs).max_abs();
        let r4 = e.adjoint().sub(f).max_abs();
        r1.max(r2).max(r3).max(r4)
    }
}
