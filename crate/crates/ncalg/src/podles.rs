use qcore::HalfInt;

use crate::action::{action_table, HopfSymbol, Side};
use crate::preset::{ALPHA, ALPHA_STAR, BETA, BETA_STAR};
use crate::{AlgebraId, AlgebraPreset, Coeff, NCPoly, NcError};

/// Eigenvalue label of `◁ k` on a homogeneous element: `h ◁ k = q^m h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grade {
    Zero,
    Pure(HalfInt),
    Mixed,
}

fn expect<C: Coeff>(alg: &AlgebraPreset<C>, id: AlgebraId) -> Result<(), NcError> {
    if alg.id == id {
        Ok(())
    } else {
        Err(NcError::WrongAlgebra { expected: id.name(), got: alg.name() })
    }
}

/// Substitute `a = ββ*`, `b = -α*β`, `b* = -β*α` into a standard-sphere
/// polynomial and reduce in SU_q(2).
pub fn embed_podles<C: Coeff>(su: &AlgebraPreset<C>, pod: &AlgebraPreset<C>, p: &NCPoly<C>) -> Result<NCPoly<C>, NcError> {
    expect(su, AlgebraId::SUq2)?;
    expect(pod, AlgebraId::PodlesStandard)?;
    let images = [
        NCPoly::word(&[BETA, BETA_STAR]),
        -NCPoly::word(&[ALPHA_STAR, BETA]),
        -NCPoly::word(&[BETA_STAR, ALPHA]),
    ];
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let factors: Vec<NCPoly<C>> = w.iter().map(|&g| images[g as usize].clone()).collect();
        out = out + su.product(&factors).scale(c);
    }
    Ok(su.normal_form(&out))
}

/// Grade of an SU_q(2) element under the right action of `k`.
pub fn graded_degree<C: Coeff>(su: &AlgebraPreset<C>, p: &NCPoly<C>) -> Result<Grade, NcError> {
    expect(su, AlgebraId::SUq2)?;
    let t = action_table(su, Side::Right).expect("SU_q(2) has a right action");
    let nf = su.normal_form(p);
    let mut grade = Grade::Zero;
    for (w, _) in nf.terms() {
        let m = w.iter().fold(HalfInt::ZERO, |acc, &g| acc + t.k_weight[g as usize]);
        grade = match grade {
            Grade::Zero => Grade::Pure(m),
            Grade::Pure(m0) if m0 == m => grade,
            _ => return Ok(Grade::Mixed),
        };
    }
    Ok(grade)
}

/// `A_m ◁ e ⊆ A_{m+1}` and `A_m ◁ f ⊆ A_{m-1}` for a homogeneous `p`.
/// Mixed input is reported as `false`.
pub fn grading_shift_holds<C: Coeff>(su: &AlgebraPreset<C>, p: &NCPoly<C>) -> Result<bool, NcError> {
    let m = match graded_degree(su, p)? {
        Grade::Zero => return Ok(true),
        Grade::Mixed => return Ok(false),
        Grade::Pure(m) => m,
    };
    let ok = |g: Grade, want: HalfInt| matches!(g, Grade::Zero) || g == Grade::Pure(want);
    let pe = su.act_side(Side::Right, &[HopfSymbol::E], p)?;
    let pf = su.act_side(Side::Right, &[HopfSymbol::F], p)?;
    Ok(ok(graded_degree(su, &pe)?, m + HalfInt::ONE) && ok(graded_degree(su, &pf)?, m - HalfInt::ONE))
}

/// Right action on a standard-sphere element. The result generally leaves
/// the sphere, so it is returned inside SU_q(2) together with its grade.
pub fn act_right_graded<C: Coeff>(
    su: &AlgebraPreset<C>,
    pod: &AlgebraPreset<C>,
    u: &[HopfSymbol],
    p: &NCPoly<C>,
) -> Result<(NCPoly<C>, Grade), NcError> {
    let x = embed_podles(su, pod, p)?;
    let y = su.act_side(Side::Right, u, &x)?;
    let g = graded_degree(su, &y)?;
    Ok((y, g))
}

type Mat2<C> = [[NCPoly<C>; 2]; 2];

/// Normal forms of `p² - p`, `p* - p` and of the difference between the
/// two displayed forms of the spinor projector, entry by entry over both
/// 2×2 blocks.
#[derive(Debug, Clone)]
pub struct ProjectorResidual<C: Coeff> {
    pub idempotent: Vec<NCPoly<C>>,
    pub selfadjoint: Vec<NCPoly<C>>,
    pub displays_agree: Vec<NCPoly<C>>,
}

impl<C: Coeff> ProjectorResidual<C> {
    pub fn max_residual(&self) -> f64 {
        self.idempotent.iter().chain(&self.selfadjoint).chain(&self.displays_agree).map(|p| p.max_magnitude()).fold(0.0, f64::max)
    }

    pub fn all_zero(&self) -> bool {
        self.idempotent.iter().chain(&self.selfadjoint).chain(&self.displays_agree).all(|p| p.is_zero())
    }
}

fn mat_mul<C: Coeff>(alg: &AlgebraPreset<C>, x: &Mat2<C>, y: &Mat2<C>) -> Mat2<C> {
    let e = |i: usize, j: usize| alg.mul(&x[i][0], &y[0][j]) + alg.mul(&x[i][1], &y[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// The two spinor projector blocks in terms of α, β.
pub fn spinor_projector<C: Coeff>(su: &AlgebraPreset<C>) -> [Mat2<C>; 2] {
    let w = |x: &[u8]| NCPoly::word(x);
    let q1 = su.q_pow(HalfInt::ONE);
    let q2 = su.q_pow(HalfInt::from_int(2));
    [
        [[w(&[ALPHA, ALPHA_STAR]), w(&[ALPHA, BETA_STAR])], [w(&[BETA, ALPHA_STAR]), w(&[BETA, BETA_STAR])]],
        [
            [w(&[ALPHA_STAR, ALPHA]), w(&[ALPHA_STAR, BETA]).scale(&q1)],
            [w(&[BETA_STAR, ALPHA]).scale(&q1), w(&[BETA_STAR, BETA]).scale(&q2)],
        ],
    ]
}

pub fn check_projector<C: Coeff>(su: &AlgebraPreset<C>, pod: &AlgebraPreset<C>) -> Result<ProjectorResidual<C>, NcError> {
    expect(su, AlgebraId::SUq2)?;
    let blocks = spinor_projector(su);
    let q1 = pod.q_pow(HalfInt::ONE);
    let q2 = pod.q_pow(HalfInt::from_int(2));
    let g = |i: u8| NCPoly::<C>::generator(i);
    let one = NCPoly::<C>::one;
    let (a, b, bs) = (g(0), g(1), g(2));
    let second: [Mat2<C>; 2] = [
        [[one() - a.scale(&q2), -bs.scale(&q1)], [-b.scale(&q1), a.clone()]],
        [[one() - a.clone(), -b.scale(&q1)], [-bs.scale(&q1), a.scale(&q2)]],
    ];
    let mut out = ProjectorResidual { idempotent: vec![], selfadjoint: vec![], displays_agree: vec![] };
    for (p, p2) in blocks.iter().zip(&second) {
        let sq = mat_mul(su, p, p);
        for i in 0..2 {
            for j in 0..2 {
                out.idempotent.push(su.normal_form(&(sq[i][j].clone() - p[i][j].clone())));
                out.selfadjoint.push(su.normal_form(&(su.star(&p[j][i]) - p[i][j].clone())));
                let emb = embed_podles(su, pod, &p2[i][j])?;
                out.displays_agree.push(su.normal_form(&(emb - p[i][j].clone())));
            }
        }
    }
    Ok(out)
}
