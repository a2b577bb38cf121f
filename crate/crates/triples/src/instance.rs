use std::sync::Arc;

use num_complex::Complex;
use qcore::{q_number, HalfInt};
use reps::{Basis, BasisLabel, Cutoff, OperatorMatrix, RepScalar, Representation};
use uqrep::ActionFamily;

use crate::{Descriptor, TripleError, TripleKind};

/// Antiunitary `J = U ∘ K` with `K` complex conjugation in the basis.
#[derive(Debug, Clone)]
pub struct RealStructure<T> {
    pub unitary: OperatorMatrix<T>,
    /// Always true here; kept so the storage says what it is.
    pub conjugate: bool,
}

impl<T: RepScalar> RealStructure<T> {
    pub fn apply(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        let w: Vec<Complex<T>> = if self.conjugate { v.iter().map(|z| z.conj()).collect() } else { v.to_vec() };
        self.unitary.apply(&w)
    }

    /// `J X J⁻¹ = U X̄ U†` for an operator `X`.
    pub fn conjugate_op(&self, x: &OperatorMatrix<T>) -> OperatorMatrix<T> {
        let xb = if self.conjugate { x.conj() } else { x.clone() };
        self.unitary.mul(&xb).mul(&self.unitary.adjoint())
    }

    /// `J² = U Ū`.
    pub fn square(&self) -> OperatorMatrix<T> {
        if self.conjugate {
            self.unitary.mul(&self.unitary.conj())
        } else {
            self.unitary.mul(&self.unitary)
        }
    }
}

/// Which copy of the symmetry an instance is built to respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryCopy {
    Left,
    Right,
}

/// A built spectral triple on a truncated Hilbert space.
#[derive(Debug, Clone)]
pub struct SpectralTriple<T> {
    pub kind: TripleKind,
    pub rep: Representation<T>,
    pub dirac: OperatorMatrix<T>,
    pub gamma: Option<OperatorMatrix<T>>,
    pub real: Option<RealStructure<T>>,
    /// `L_q`, the generator of the ideal of infinitesimals.
    pub ideal_weight: Option<OperatorMatrix<T>>,
    /// Symmetry action family and the copies `D` is claimed to commute with.
    pub symmetry: Option<(ActionFamily, Vec<SymmetryCopy>)>,
}

fn re<T: RepScalar>(x: T) -> Complex<T> {
    Complex::new(x, T::lit(0.0))
}

/// `i^k`.
pub fn i_pow<T: RepScalar>(k: i32) -> Complex<T> {
    let (z, o) = (T::lit(0.0), T::lit(1.0));
    match k.rem_euclid(4) {
        0 => Complex::new(o, z),
        1 => Complex::new(z, o),
        2 => Complex::new(-o, z),
        _ => Complex::new(z, -o),
    }
}

fn spin_of(cutoff: Cutoff) -> Result<HalfInt, TripleError> {
    match cutoff {
        Cutoff::Spin(l) => Ok(l),
        c => Err(TripleError::BadTruncation(format!("{c:?} is not a spin cutoff"))),
    }
}

fn podles_flip<T: RepScalar>(basis: &Arc<Basis>, w: impl Fn(HalfInt, i8) -> Complex<T>) -> OperatorMatrix<T> {
    OperatorMatrix::from_columns(basis.clone(), basis.clone(), |lab| match *lab {
        BasisLabel::Podles { l, s, m } => vec![(BasisLabel::Podles { l, s: -s, m }, w(l, s))],
        _ => unreachable!(),
    })
}

fn podles_j<T: RepScalar>(basis: &Arc<Basis>) -> RealStructure<T> {
    let u = OperatorMatrix::from_columns(basis.clone(), basis.clone(), |lab| match *lab {
        BasisLabel::Podles { l, s, m } => vec![(BasisLabel::Podles { l, s: -s, m: -m }, i_pow(m.twice()))],
        _ => unreachable!(),
    });
    RealStructure { unitary: u, conjugate: true }
}

fn sign_grading<T: RepScalar>(basis: &Arc<Basis>) -> OperatorMatrix<T> {
    OperatorMatrix::real_diagonal(basis.clone(), |lab| match *lab {
        BasisLabel::Podles { s, .. } | BasisLabel::Generic { s, .. } => T::lit(s as f64),
        _ => unreachable!(),
    })
}

impl<T: RepScalar> SpectralTriple<T> {
    pub fn build(kind: TripleKind, cutoff: Cutoff, q: T) -> Result<Self, TripleError> {
        let lit = T::lit;
        let t = |x: HalfInt| lit(x.to_f64());
        let mut gamma = None;
        let mut real = None;
        let mut ideal_weight = None;
        let mut symmetry = None;
        let (rep, dirac) = match kind {
            TripleKind::Bk | TripleKind::GoswamiAbs => {
                let rep = Representation::bibikov_kulish(spin_of(cutoff)?, q)?;
                let q2 = q * q;
                let d = OperatorMatrix::real_diagonal(rep.basis.clone(), |lab| match (*lab, kind) {
                    (BasisLabel::Bk { l, plus: true, .. }, TripleKind::Bk) => q_number(t(l), q2),
                    (BasisLabel::Bk { l, plus: false, .. }, TripleKind::Bk) => -q_number(t(l) + lit(1.0), q2),
                    (BasisLabel::Bk { l, .. }, _) => t(l) + lit(0.5),
                    _ => unreachable!(),
                });
                (rep, d)
            }
            TripleKind::Cp => {
                let rep = Representation::left_regular(spin_of(cutoff)?, q)?;
                let d = OperatorMatrix::real_diagonal(rep.basis.clone(), |lab| match *lab {
                    BasisLabel::L2 { l, i, .. } => if i == l { -t(l) } else { t(l) },
                    _ => unreachable!(),
                });
                symmetry = Some((ActionFamily::L2, vec![SymmetryCopy::Right]));
                (rep, d)
            }
            TripleKind::CpShift => {
                let Cutoff::Shift { ni, nj } = cutoff else {
                    return Err(TripleError::BadTruncation(format!("{cutoff:?} is not a shift cutoff")));
                };
                let rep = Representation::shift(ni, nj, q)?;
                let d = OperatorMatrix::real_diagonal(rep.basis.clone(), |lab| match *lab {
                    BasisLabel::Shift { i, j } => lit(i as f64 * if j >= 0 { 1.0 } else { -1.0 } + j as f64),
                    _ => unreachable!(),
                });
                (rep, d)
            }
            TripleKind::Dlssv { c1_up, c2_up, c1_dn, c2_dn } => {
                let rep = Representation::spinorial(spin_of(cutoff)?, q)?;
                let d = OperatorMatrix::real_diagonal(rep.basis.clone(), |lab| match *lab {
                    BasisLabel::Spinor { j, up: true, .. } => lit(c1_up) * t(j) + lit(c2_up),
                    BasisLabel::Spinor { j, up: false, .. } => lit(c1_dn) * t(j) + lit(c2_dn),
                    _ => unreachable!(),
                });
                let basis = rep.basis.clone();
                let u = OperatorMatrix::from_columns(basis.clone(), basis.clone(), |lab| match *lab {
                    BasisLabel::Spinor { j, up, mu, n } => {
                        let k = if up { 2 * j.twice() + mu.twice() + n.twice() } else { 2 * j.twice() - mu.twice() - n.twice() };
                        vec![(BasisLabel::Spinor { j, up, mu: -mu, n: -n }, i_pow(k))]
                    }
                    _ => unreachable!(),
                });
                real = Some(RealStructure { unitary: u, conjugate: true });
                ideal_weight = Some(OperatorMatrix::real_diagonal(basis, |lab| q.powf(t(lab.level()))));
                symmetry = Some((ActionFamily::Spinor, vec![SymmetryCopy::Left, SymmetryCopy::Right]));
                (rep, d)
            }
            TripleKind::DsStandard { z_re, z_im } => {
                if z_re == 0.0 && z_im == 0.0 {
                    return Err(TripleError::BadParameter("z must be nonzero".into()));
                }
                let rep = Representation::podles_standard(spin_of(cutoff)?, q)?;
                let z = Complex::new(lit(z_re), lit(z_im));
                // column s = +1 maps to s = -1 with z, and back with z̄
                let d = podles_flip(&rep.basis, |l, s| {
                    let v = q_number(t(l) + lit(0.5), q);
                    if s > 0 { z * v } else { z.conj() * v }
                });
                gamma = Some(sign_grading(&rep.basis));
                real = Some(podles_j(&rep.basis));
                symmetry = Some((ActionFamily::PodlesStandard, vec![SymmetryCopy::Left]));
                (rep, d)
            }
            TripleKind::DlpsEquatorial => {
                let rep = Representation::podles_equatorial(spin_of(cutoff)?, q)?;
                let d = podles_flip(&rep.basis, |l, _| re(t(l) + lit(0.5)));
                gamma = Some(sign_grading(&rep.basis));
                real = Some(podles_j(&rep.basis));
                ideal_weight = Some(OperatorMatrix::real_diagonal(rep.basis.clone(), |lab| q.powf(t(lab.level()))));
                symmetry = Some((ActionFamily::PodlesEquatorial, vec![SymmetryCopy::Left]));
                (rep, d)
            }
            TripleKind::CpGeneric { c } => {
                let Cutoff::Count(n) = cutoff else {
                    return Err(TripleError::BadTruncation(format!("{cutoff:?} is not a count cutoff")));
                };
                let rep = Representation::podles_generic(n, q, lit(c))?;
                let d = OperatorMatrix::from_columns(rep.basis.clone(), rep.basis.clone(), |lab| match *lab {
                    BasisLabel::Generic { n, s } => vec![(BasisLabel::Generic { n, s: -s }, re(lit(n as f64)))],
                    _ => unreachable!(),
                });
                gamma = Some(sign_grading(&rep.basis));
                (rep, d)
            }
        };
        Ok(SpectralTriple { kind, rep, dirac, gamma, real, ideal_weight, symmetry })
    }

    pub fn build_default(kind: TripleKind, q: T) -> Result<Self, TripleError> {
        Self::build(kind, kind.default_cutoff(), q)
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.rep.basis
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn descriptor(&self) -> Descriptor {
        Descriptor {
            triple: self.kind,
            truncation: cutoff_label(self.basis().cutoff),
            q: self.rep.q.as_f64(),
            dimension: self.dim(),
        }
    }
}

/// `L=…`, `Ni=…,Nj=…` or `N=…`.
pub fn cutoff_label(c: Cutoff) -> String {
    match c {
        Cutoff::Spin(l) => format!("L={l}"),
        Cutoff::Shift { ni, nj } => format!("Ni={ni},Nj={nj}"),
        Cutoff::Count(n) => format!("N={n}"),
    }
}
