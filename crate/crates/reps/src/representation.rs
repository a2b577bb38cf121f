use std::collections::HashMap;
use std::sync::Arc;

use ncalg::{AlgebraId, AlgebraPreset, Coeff, FloatCtx, NCPoly};
use num_complex::Complex;
use qcore::{HalfInt, Scalar};
use uqrep::{bk_change_of_basis, conjugate_by, lift_to_spin, spinor_change_of_basis, Basis, BasisLabel, OperatorMatrix};

use crate::formulas;
use crate::RepError;

/// Float scalar usable both for matrices and as polynomial coefficients.
pub trait RepScalar: Scalar + Coeff<Ctx = FloatCtx<Self>> {}
impl<T: Scalar + Coeff<Ctx = FloatCtx<T>>> RepScalar for T {}

/// Which representation a [`Representation`] realises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepFamily {
    /// Left regular representation of SU_q(2) on `L²`.
    LeftRegular,
    /// `π ⊗ 1` in the coupled spinor basis.
    Spinorial,
    /// `1 ⊗ π` in the `v^±` basis of the Bibikov–Kulish operator.
    BibikovKulish,
    PodlesStandard,
    PodlesEquatorial,
    PodlesGeneric,
    /// SU_q(2) on `ℓ²(N × Z)`.
    Shift,
}

impl RepFamily {
    pub fn algebra(self) -> AlgebraId {
        match self {
            RepFamily::LeftRegular | RepFamily::Spinorial | RepFamily::BibikovKulish | RepFamily::Shift => AlgebraId::SUq2,
            RepFamily::PodlesStandard => AlgebraId::PodlesStandard,
            RepFamily::PodlesEquatorial => AlgebraId::PodlesEquatorial,
            RepFamily::PodlesGeneric => AlgebraId::PodlesGeneric,
        }
    }

    /// Margin one generator letter spends.
    pub fn letter_margin(self) -> HalfInt {
        match self {
            RepFamily::LeftRegular | RepFamily::Spinorial | RepFamily::BibikovKulish => HalfInt::HALF,
            _ => HalfInt::ONE,
        }
    }

    /// Extra margin of the basis itself: a spinor label at `j` has an
    /// `L²` component at `ℓ = j + ½`.
    pub fn level_offset(self) -> HalfInt {
        match self {
            RepFamily::Spinorial => HalfInt::HALF,
            _ => HalfInt::ZERO,
        }
    }
}

/// Generator matrices of a truncated *-representation, in the generator
/// order of the algebra preset. Starred generators are adjoints.
#[derive(Debug, Clone)]
pub struct Representation<T> {
    pub family: RepFamily,
    pub basis: Arc<Basis>,
    pub q: T,
    /// Generic-sphere parameter; zero elsewhere.
    pub c: T,
    gens: Vec<OperatorMatrix<T>>,
}

/// Matrix of a polynomial together with the margin its words spend.
#[derive(Debug, Clone)]
pub struct Evaluated<T> {
    pub matrix: OperatorMatrix<T>,
    pub margin: HalfInt,
    pub mask: Vec<bool>,
}

impl<T: Scalar> Evaluated<T> {
    /// Frobenius norm on the interior where the truncation is exact.
    pub fn interior_norm(&self) -> T {
        self.matrix.frobenius_masked(&self.mask)
    }
}

fn re<T: Scalar>(x: T) -> Complex<T> {
    Complex::new(x, T::lit(0.0))
}

fn from_formula<T: Scalar>(basis: &Arc<Basis>, f: impl Fn(&BasisLabel) -> Vec<(BasisLabel, T)>) -> OperatorMatrix<T> {
    OperatorMatrix::from_columns(basis.clone(), basis.clone(), |lab| f(lab).into_iter().map(|(t, v)| (t, re(v))).collect())
}

/// `[α, β, α*, β*]` from `[α, β]`.
fn with_adjoints<T: Scalar>(mut unstarred: Vec<OperatorMatrix<T>>) -> Vec<OperatorMatrix<T>> {
    let stars: Vec<_> = unstarred.iter().map(|m| m.adjoint()).collect();
    unstarred.extend(stars);
    unstarred
}

/// `[a, b, b*]` from `[a, b]`; `a` is self-adjoint.
fn sphere_gens<T: Scalar>([a, b]: [OperatorMatrix<T>; 2]) -> Vec<OperatorMatrix<T>> {
    let bs = b.adjoint();
    vec![a, b, bs]
}

fn check_q<T: Scalar>(q: T) -> Result<(), RepError> {
    if q > T::lit(0.0) && q < T::lit(1.0) {
        Ok(())
    } else {
        Err(RepError::BadParameter(format!("q = {q} is not in (0, 1)")))
    }
}

impl<T: RepScalar> Representation<T> {
    fn build(family: RepFamily, basis: Arc<Basis>, q: T, c: T, gens: Vec<OperatorMatrix<T>>) -> Self {
        Representation { family, basis, q, c, gens }
    }

    /// Left regular representation on `ε_{ℓ,i,j}`, `ℓ ≤ L`.
    pub fn left_regular(big_l: HalfInt, q: T) -> Result<Self, RepError> {
        check_q(q)?;
        let basis = Arc::new(Basis::l2(big_l));
        let gens = [0u8, 1].map(|g| from_formula(&basis, |lab| formulas::left_regular(g, lab, q)));
        Ok(Self::build(RepFamily::LeftRegular, basis, q, T::lit(0.0), with_adjoints(gens.to_vec())))
    }

    /// `W (π ⊗ 1) W†` on the coupled spinor basis built from `ℓ ≤ L`.
    pub fn spinorial(big_l: HalfInt, q: T) -> Result<Self, RepError> {
        let l2 = Self::left_regular(big_l, q)?;
        let prod = Arc::new(Basis::l2_spin(big_l));
        let spin = Arc::new(Basis::spinor(big_l));
        let w = spinor_change_of_basis(&spin, &prod, q);
        let gens = l2.gens.iter().map(|g| conjugate_by(&w, &lift_to_spin(g, &prod))).collect();
        Ok(Self::build(RepFamily::Spinorial, spin, q, T::lit(0.0), gens))
    }

    /// `1 ⊗ π` on `C² ⊗ L²`, written in the `v^±` basis.
    pub fn bibikov_kulish(big_l: HalfInt, q: T) -> Result<Self, RepError> {
        let l2 = Self::left_regular(big_l, q)?;
        let prod = Arc::new(Basis::l2_spin(big_l));
        let bk = Arc::new(Basis::bk(big_l));
        let w = bk_change_of_basis(&bk, &prod, q);
        let gens = l2.gens.iter().map(|g| conjugate_by(&w, &lift_to_spin(g, &prod))).collect();
        Ok(Self::build(RepFamily::BibikovKulish, bk, q, T::lit(0.0), gens))
    }

    /// Standard Podleś sphere on `|ℓ, m, s>`, half-odd `ℓ ≤ L`.
    pub fn podles_standard(big_l: HalfInt, q: T) -> Result<Self, RepError> {
        check_q(q)?;
        let basis = Self::podles_basis(big_l)?;
        let gens = [0u8, 1].map(|g| from_formula(&basis, |lab| formulas::podles_standard(g, lab, q)));
        Ok(Self::build(RepFamily::PodlesStandard, basis, q, T::lit(0.0), sphere_gens(gens)))
    }

    pub fn podles_equatorial(big_l: HalfInt, q: T) -> Result<Self, RepError> {
        check_q(q)?;
        let basis = Self::podles_basis(big_l)?;
        let gens = [0u8, 1].map(|g| from_formula(&basis, |lab| formulas::podles_equatorial(g, lab, q)));
        Ok(Self::build(RepFamily::PodlesEquatorial, basis, q, T::lit(0.0), sphere_gens(gens)))
    }

    /// Generic Podleś sphere on `ε_{n,s}`, `n ≤ N`, parameter `c > 0`.
    pub fn podles_generic(n_max: i32, q: T, c: T) -> Result<Self, RepError> {
        check_q(q)?;
        if !(c > T::lit(0.0)) {
            return Err(RepError::BadParameter(format!("c = {c} must be positive")));
        }
        if n_max < 1 {
            return Err(RepError::BadParameter("N must be at least 1".into()));
        }
        let basis = Arc::new(Basis::generic(n_max));
        let gens = [0u8, 1].map(|g| from_formula(&basis, |lab| formulas::podles_generic(g, lab, q, c)));
        Ok(Self::build(RepFamily::PodlesGeneric, basis, q, c, sphere_gens(gens)))
    }

    /// SU_q(2) on `ε_{i,j}`, `0 ≤ i ≤ N_i`, `|j| ≤ N_j`.
    pub fn shift(ni: i32, nj: i32, q: T) -> Result<Self, RepError> {
        check_q(q)?;
        let basis = Arc::new(Basis::shift(ni, nj));
        let gens = [0u8, 1].map(|g| from_formula(&basis, |lab| formulas::shift(g, lab, q)));
        Ok(Self::build(RepFamily::Shift, basis, q, T::lit(0.0), with_adjoints(gens.to_vec())))
    }

    fn podles_basis(big_l: HalfInt) -> Result<Arc<Basis>, RepError> {
        if big_l.is_integer() || big_l < HalfInt::HALF {
            return Err(RepError::BadParameter(format!("Podleś truncation {big_l} must be a positive half-odd spin")));
        }
        Ok(Arc::new(Basis::podles(big_l)))
    }

    pub fn algebra(&self) -> AlgebraId {
        self.family.algebra()
    }

    /// The float preset of the represented algebra at this `q` (and `c`).
    pub fn preset(&self) -> AlgebraPreset<T> {
        AlgebraPreset::new(self.algebra(), FloatCtx::with_c(self.q, self.c))
    }

    pub fn generator(&self, g: u8) -> &OperatorMatrix<T> {
        &self.gens[g as usize]
    }

    pub fn generators(&self) -> &[OperatorMatrix<T>] {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Labels where every word of up to `letters` generators is computed
    /// exactly.
    pub fn interior_mask(&self, letters: usize) -> Vec<bool> {
        self.basis.interior_mask(self.margin_for(letters) + self.family.level_offset())
    }

    pub fn margin_for(&self, letters: usize) -> HalfInt {
        HalfInt::from_twice(self.family.letter_margin().twice() * letters as i32)
    }

    /// `π(p)`, reusing products of shared word suffixes.
    pub fn evaluate(&self, p: &NCPoly<T>) -> Evaluated<T> {
        let mut cache: HashMap<Vec<u8>, OperatorMatrix<T>> = HashMap::new();
        let mut acc = OperatorMatrix::zeros(self.basis.clone(), self.basis.clone());
        for (w, c) in p.terms() {
            let m = self.word_matrix(w, &mut cache);
            acc = acc.add_scaled(&m, re(*c));
        }
        let margin = self.margin_for(p.degree());
        let mask = self.interior_mask(p.degree());
        Evaluated { matrix: acc, margin, mask }
    }

    fn word_matrix(&self, w: &[u8], cache: &mut HashMap<Vec<u8>, OperatorMatrix<T>>) -> OperatorMatrix<T> {
        if w.is_empty() {
            return OperatorMatrix::identity(self.basis.clone());
        }
        if let Some(m) = cache.get(w) {
            return m.clone();
        }
        let m = if w.len() == 1 {
            self.gens[w[0] as usize].clone()
        } else {
            let tail = self.word_matrix(&w[1..], cache);
            self.gens[w[0] as usize].mul(&tail)
        };
        cache.insert(w.to_vec(), m.clone());
        m
    }

    /// Interior Frobenius norm of every defining relation of the algebra.
    pub fn relation_residuals(&self) -> Vec<(String, T)> {
        let alg = self.preset();
        alg.relations().iter().map(|r| (alg.format(r), self.evaluate(r).interior_norm())).collect()
    }

    /// `<v, π(p) v>` for a basis vector `v`, by repeated matrix-vector
    /// products. Exact when no word leaves the truncation.
    pub fn vector_state(&self, p: &NCPoly<T>, v: &BasisLabel) -> Result<Complex<T>, RepError> {
        let k = self.basis.index_of(v).ok_or_else(|| RepError::BadParameter(format!("{v} is not in the basis")))?;
        let need = v.level() + self.margin_for(p.degree()) + self.family.level_offset();
        if need > self.basis.max_spin() {
            return Err(RepError::TruncationTooSmall { needed: need.to_string(), have: self.basis.max_spin().to_string() });
        }
        let n = self.dim();
        let mut total = Complex::new(T::lit(0.0), T::lit(0.0));
        for (w, c) in p.terms() {
            let mut x = vec![Complex::new(T::lit(0.0), T::lit(0.0)); n];
            x[k] = Complex::new(T::lit(1.0), T::lit(0.0));
            for &g in w.iter().rev() {
                x = self.gens[g as usize].apply(&x);
            }
            total += x[k] * re(*c);
        }
        Ok(total)
    }

    /// Haar state `χ(p) = <ε_{000}, π(p) ε_{000}>` in the left regular
    /// representation.
    pub fn haar_state(&self, p: &NCPoly<T>) -> Result<Complex<T>, RepError> {
        if self.family != RepFamily::LeftRegular {
            return Err(RepError::WrongFamily("the Haar state needs the left regular representation".into()));
        }
        self.vector_state(p, &BasisLabel::L2 { l: HalfInt::ZERO, i: HalfInt::ZERO, j: HalfInt::ZERO })
    }
}

/// Haar state of an SU_q(2) polynomial using the smallest sufficient
/// truncation.
pub fn haar_state<T: RepScalar>(p: &NCPoly<T>, q: T) -> Result<Complex<T>, RepError> {
    let l = HalfInt::from_twice(p.degree() as i32);
    let rep = Representation::left_regular(l.max(HalfInt::HALF), q)?;
    rep.haar_state(p)
}
