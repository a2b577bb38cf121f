use qcore::HalfInt;

use crate::preset::{A, ALPHA, ALPHA_STAR, BETA, BETA_STAR, B, B_STAR};
use crate::{AlgebraId, AlgebraPreset, Coeff, NCPoly, NcError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HopfSymbol {
    E,
    F,
    K,
    KInv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// A generator of U_q(su(2)) acting from one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HopfGenerator {
    pub symbol: HopfSymbol,
    pub side: Side,
}

impl HopfGenerator {
    pub fn left(symbol: HopfSymbol) -> Self {
        HopfGenerator { symbol, side: Side::Left }
    }

    pub fn right(symbol: HopfSymbol) -> Self {
        HopfGenerator { symbol, side: Side::Right }
    }
}

impl HopfSymbol {
    pub fn counit(self) -> i32 {
        match self {
            HopfSymbol::K | HopfSymbol::KInv => 1,
            _ => 0,
        }
    }

    /// `(S u)^*` as `(scalar exponent of q, sign, symbol)`:
    /// `S e = -q^{-1} e`, `S f = -q f`, `S k = k^{-1}`, then `e* = f`, `k* = k`.
    pub fn antipode_star(self) -> (i32, i32, HopfSymbol) {
        match self {
            HopfSymbol::E => (-1, -1, HopfSymbol::F),
            HopfSymbol::F => (1, -1, HopfSymbol::E),
            HopfSymbol::K => (0, 1, HopfSymbol::KInv),
            HopfSymbol::KInv => (0, 1, HopfSymbol::K),
        }
    }

    pub fn star(self) -> HopfSymbol {
        match self {
            HopfSymbol::E => HopfSymbol::F,
            HopfSymbol::F => HopfSymbol::E,
            s => s,
        }
    }
}

/// Values of `e`, `f` on the generators and the `k` weights (`k ▷ x = q^w x`).
#[derive(Debug, Clone)]
pub struct ActionTable<C: Coeff> {
    pub k_weight: Vec<HalfInt>,
    pub e: Vec<NCPoly<C>>,
    pub f: Vec<NCPoly<C>>,
}

fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

/// The tables below are the ones under which the Hilbert space
/// representations are covariant.
pub fn action_table<C: Coeff>(alg: &AlgebraPreset<C>, side: Side) -> Option<ActionTable<C>> {
    let qp = |twice: i32| alg.q_pow(h(twice));
    let g = |i: u8, c: C| NCPoly::monomial(vec![i], c);
    let one = |c: C| NCPoly::scalar(c);
    let z = NCPoly::<C>::zero;
    let neg = |c: C| -c;
    match (alg.id, side) {
        (AlgebraId::SUq2, Side::Left) => {
            let mut e = vec![z(); 4];
            let mut f = vec![z(); 4];
            e[ALPHA_STAR as usize] = g(BETA_STAR, C::one());
            e[BETA as usize] = g(ALPHA, neg(qp(-2)));
            f[ALPHA as usize] = g(BETA, neg(qp(2)));
            f[BETA_STAR as usize] = g(ALPHA_STAR, C::one());
            Some(ActionTable { k_weight: vec![h(-1), h(1), h(1), h(-1)], e, f })
        }
        (AlgebraId::SUq2, Side::Right) => {
            let mut e = vec![z(); 4];
            let mut f = vec![z(); 4];
            e[ALPHA as usize] = g(BETA_STAR, C::one());
            e[BETA as usize] = g(ALPHA_STAR, neg(qp(-2)));
            f[ALPHA_STAR as usize] = g(BETA, neg(qp(2)));
            f[BETA_STAR as usize] = g(ALPHA, C::one());
            Some(ActionTable { k_weight: vec![h(-1), h(-1), h(1), h(1)], e, f })
        }
        (AlgebraId::PodlesStandard, Side::Left) => {
            let e = vec![
                g(B_STAR, qp(-1)),
                g(A, neg(qp(1) + qp(-3))) + one(qp(-3)),
                z(),
            ];
            let f = vec![
                g(B, neg(qp(1))),
                z(),
                g(A, qp(3) + qp(-1)) + one(neg(qp(-1))),
            ];
            Some(ActionTable { k_weight: vec![h(0), h(2), h(-2)], e, f })
        }
        (AlgebraId::PodlesEquatorial, Side::Left) => {
            let e = vec![g(B, neg(qp(-3))), z(), g(A, qp(3) + qp(-1))];
            let f = vec![g(B_STAR, qp(-1)), g(A, neg(qp(5) + qp(1))), z()];
            Some(ActionTable { k_weight: vec![h(0), h(-2), h(2)], e, f })
        }
        _ => None,
    }
}

impl<C: Coeff> AlgebraPreset<C> {
    fn word_weight(&self, table: &ActionTable<C>, w: &[u8]) -> HalfInt {
        w.iter().fold(HalfInt::ZERO, |acc, &g| acc + table.k_weight[g as usize])
    }

    fn act_one(&self, table: &ActionTable<C>, s: HopfSymbol, p: &NCPoly<C>) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            match s {
                HopfSymbol::K => out.add_term(w.clone(), c.clone() * self.q_pow(self.word_weight(table, w))),
                HopfSymbol::KInv => out.add_term(w.clone(), c.clone() * self.q_pow(-self.word_weight(table, w))),
                HopfSymbol::E | HopfSymbol::F => {
                    // Δe = e ⊗ k + k^{-1} ⊗ e, the same shape for f
                    let vals = if s == HopfSymbol::E { &table.e } else { &table.f };
                    for i in 0..w.len() {
                        let v = &vals[w[i] as usize];
                        if v.is_zero() {
                            continue;
                        }
                        let scal = c.clone()
                            * self.q_pow(self.word_weight(table, &w[i + 1..]) - self.word_weight(table, &w[..i]));
                        let pre = NCPoly::word(&w[..i]);
                        let post = NCPoly::word(&w[i + 1..]);
                        out = out + pre.concat(v).concat(&post).scale(&scal);
                    }
                }
            }
        }
        self.normal_form(&out)
    }

    pub fn has_action(&self, side: Side) -> bool {
        action_table(self, side).is_some()
    }

    /// Apply a word of Hopf generators. Left letters act as `u_1 ▷ (u_2 ▷ p)`,
    /// right letters as `(p ◁ u_1) ◁ u_2`; the two sides commute.
    pub fn act(&self, u: &[HopfGenerator], p: &NCPoly<C>) -> Result<NCPoly<C>, NcError> {
        let left = action_table(self, Side::Left);
        let right = action_table(self, Side::Right);
        let mut cur = self.normal_form(p);
        for g in u.iter().rev().filter(|g| g.side == Side::Left) {
            let t = left.as_ref().ok_or(NcError::NoAction { alg: self.name(), side: "left" })?;
            cur = self.act_one(t, g.symbol, &cur);
        }
        for g in u.iter().filter(|g| g.side == Side::Right) {
            let t = match right.as_ref() {
                Some(t) => t,
                None if self.id == AlgebraId::PodlesStandard => return Err(NcError::LeavesAlgebra(self.name())),
                None => return Err(NcError::NoAction { alg: self.name(), side: "right" }),
            };
            cur = self.act_one(t, g.symbol, &cur);
        }
        Ok(cur)
    }

    /// Single-sided convenience form of [`AlgebraPreset::act`].
    pub fn act_side(&self, side: Side, u: &[HopfSymbol], p: &NCPoly<C>) -> Result<NCPoly<C>, NcError> {
        let word: Vec<HopfGenerator> = u.iter().map(|&symbol| HopfGenerator { symbol, side }).collect();
        self.act(&word, p)
    }

    /// Residual of `u ▷ h* = ((S u)^* ▷ h)^*`.
    pub fn star_compat_check(&self, u: HopfSymbol, p: &NCPoly<C>) -> Result<NCPoly<C>, NcError> {
        let lhs = self.act_side(Side::Left, &[u], &self.star(p))?;
        let (qe, sign, v) = u.antipode_star();
        let inner = self.act_side(Side::Left, &[v], p)?.scale(&(C::from_ratio(sign as i64, 1) * self.q_pow(HalfInt::from_int(qe))));
        Ok(self.normal_form(&(lhs - self.star(&inner))))
    }
}
