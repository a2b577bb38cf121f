use std::sync::Arc;

use num_complex::Complex;
use qcore::{HalfInt, Scalar};

use crate::{sigma_entry, Basis, BasisLabel, Family, OperatorMatrix, UGen, UqError};

/// Which symmetry a Hilbert space carries; the spheres share labels but not
/// the action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionFamily {
    L2,
    /// `L² ⊗ C²`; the left copy is coupled with `C²` through the coproduct.
    L2Spin,
    Spinor,
    PodlesStandard,
    /// `k, e, f` act as `σ_ℓ(k⁻¹), σ_ℓ(f), σ_ℓ(e)` on `m`: the
    /// equatorial representation is covariant for this reflected action.
    PodlesEquatorial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionSide {
    Left,
    Right,
}

#[derive(Debug, Clone)]
pub struct SymmetryAction<T> {
    pub family: ActionFamily,
    pub side: ActionSide,
    pub generator: UGen,
    pub matrix: OperatorMatrix<T>,
}

fn re<T: Scalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

fn reflect(u: UGen) -> UGen {
    match u {
        UGen::E => UGen::F,
        UGen::F => UGen::E,
        UGen::K => UGen::KInv,
        UGen::KInv => UGen::K,
    }
}

/// `Δu` on `V_ℓ ⊗ C²` applied to `|ℓ, i> ⊗ e_s`, with `Δe = e ⊗ k + k⁻¹ ⊗ e`.
fn coproduct_image<T: Scalar>(u: UGen, l: HalfInt, i: HalfInt, s: HalfInt, q: T) -> Vec<(HalfInt, HalfInt, T)> {
    let half = HalfInt::HALF;
    let mut out = Vec::new();
    let kw = |g: UGen, l: HalfInt, m: HalfInt| sigma_entry(g, l, m, q).map(|x| x.1).unwrap_or_else(T::zero);
    match u {
        UGen::K | UGen::KInv => out.push((i, s, kw(u, l, i) * kw(u, half, s))),
        UGen::E | UGen::F => {
            if let Some((i2, v)) = sigma_entry(u, l, i, q) {
                out.push((i2, s, v * kw(UGen::K, half, s)));
            }
            if let Some((s2, v)) = sigma_entry(u, half, s, q) {
                out.push((i, s2, kw(UGen::KInv, l, i) * v));
            }
        }
    }
    out
}

/// Matrix of a symmetry generator on a truncated Hilbert space.
pub fn action_matrix<T: Scalar>(
    basis: &Arc<Basis>,
    family: ActionFamily,
    side: ActionSide,
    u: UGen,
    q: T,
) -> Result<OperatorMatrix<T>, UqError> {
    let expected = match family {
        ActionFamily::L2 => Family::L2,
        ActionFamily::L2Spin => Family::L2Spin,
        ActionFamily::Spinor => Family::Spinor,
        ActionFamily::PodlesStandard | ActionFamily::PodlesEquatorial => Family::Podles,
    };
    if basis.family != expected {
        return Err(UqError::Unsupported(format!("{family:?} action on a {:?} basis", basis.family)));
    }
    let podles_side = matches!(family, ActionFamily::PodlesStandard | ActionFamily::PodlesEquatorial);
    if podles_side && side == ActionSide::Right {
        return Err(UqError::Unsupported(format!("right action on {family:?}")));
    }
    let one = |lab: BasisLabel, v: T| vec![(lab, re(v))];
    let m = OperatorMatrix::from_columns(basis.clone(), basis.clone(), |lab| match (*lab, family, side) {
        (BasisLabel::L2 { l, i, j }, _, ActionSide::Left) => {
            sigma_entry(u, l, i, q).map(|(i, v)| one(BasisLabel::L2 { l, i, j }, v)).unwrap_or_default()
        }
        (BasisLabel::L2 { l, i, j }, _, ActionSide::Right) => {
            sigma_entry(u, l, j, q).map(|(j, v)| one(BasisLabel::L2 { l, i, j }, v)).unwrap_or_default()
        }
        (BasisLabel::L2Spin { l, i, j, s }, _, ActionSide::Left) => coproduct_image(u, l, i, s, q)
            .into_iter()
            .map(|(i, s, v)| (BasisLabel::L2Spin { l, i, j, s }, re(v)))
            .collect(),
        (BasisLabel::L2Spin { l, i, j, s }, _, ActionSide::Right) => {
            sigma_entry(u, l, j, q).map(|(j, v)| one(BasisLabel::L2Spin { l, i, j, s }, v)).unwrap_or_default()
        }
        (BasisLabel::Spinor { j, up, mu, n }, _, ActionSide::Left) => {
            sigma_entry(u, j, mu, q).map(|(mu, v)| one(BasisLabel::Spinor { j, up, mu, n }, v)).unwrap_or_default()
        }
        (BasisLabel::Spinor { j, up, mu, n }, _, ActionSide::Right) => {
            let ln = if up { j + HalfInt::HALF } else { j - HalfInt::HALF };
            sigma_entry(u, ln, n, q).map(|(n, v)| one(BasisLabel::Spinor { j, up, mu, n }, v)).unwrap_or_default()
        }
        (BasisLabel::Podles { l, s, m }, ActionFamily::PodlesStandard, _) => {
            sigma_entry(u, l, m, q).map(|(m, v)| one(BasisLabel::Podles { l, s, m }, v)).unwrap_or_default()
        }
        (BasisLabel::Podles { l, s, m }, ActionFamily::PodlesEquatorial, _) => {
            sigma_entry(reflect(u), l, m, q).map(|(m, v)| one(BasisLabel::Podles { l, s, m }, v)).unwrap_or_default()
        }
        _ => vec![],
    });
    Ok(m)
}

pub fn symmetry_action<T: Scalar>(
    basis: &Arc<Basis>,
    family: ActionFamily,
    side: ActionSide,
    u: UGen,
    q: T,
) -> Result<SymmetryAction<T>, UqError> {
    Ok(SymmetryAction { family, side, generator: u, matrix: action_matrix(basis, family, side, u, q)? })
}

/// Operator implementing `◁ u` of the algebra through covariance with the
/// right copy: `R_e = q⁻¹ σ(f)`, `R_f = q σ(e)`, `R_k = σ(k)`, all on the
/// right index. This is the Θ-twisted second factor `x ◁ S⁻¹Θ(u')`.
pub fn twisted_right_operator<T: Scalar>(basis: &Arc<Basis>, family: ActionFamily, u: UGen, q: T) -> Result<OperatorMatrix<T>, UqError> {
    let raw = |g| action_matrix(basis, family, ActionSide::Right, g, q);
    Ok(match u {
        UGen::E => raw(UGen::F)?.scale_real(q.recip()),
        UGen::F => raw(UGen::E)?.scale_real(q),
        g => raw(g)?,
    })
}

/// `u ⊗ u'` acting as the commuting product of the left action of `u` and
/// the right action of `u'`.
pub fn combined_action<T: Scalar>(basis: &Arc<Basis>, family: ActionFamily, u: UGen, u2: UGen, q: T) -> Result<OperatorMatrix<T>, UqError> {
    let l = action_matrix(basis, family, ActionSide::Left, u, q)?;
    let r = action_matrix(basis, family, ActionSide::Right, u2, q)?;
    Ok(l.mul(&r))
}
