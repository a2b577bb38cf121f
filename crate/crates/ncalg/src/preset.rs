use qcore::HalfInt;

use crate::{Coeff, NCPoly, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraId {
    SUq2,
    PodlesStandard,
    PodlesEquatorial,
    /// Generic sphere; the parameter `c` lives in the coefficient context.
    PodlesGeneric,
}

impl AlgebraId {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::SUq2 => "SUq2",
            AlgebraId::PodlesStandard => "PodlesStandard",
            AlgebraId::PodlesEquatorial => "PodlesEquatorial",
            AlgebraId::PodlesGeneric => "PodlesGeneric",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorInfo {
    pub name: &'static str,
    pub star: u8,
}

/// Oriented rewrite rule `lhs -> rhs`; every left side is a word of length two.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule<C> {
    pub lhs: [u8; 2],
    pub rhs: NCPoly<C>,
}

/// Overlap `xyz` of two left sides and the size of the difference between
/// its two completions.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPair {
    pub word: Word,
    pub residual: f64,
}

pub(crate) const ALPHA: u8 = 0;
pub(crate) const BETA: u8 = 1;
pub(crate) const ALPHA_STAR: u8 = 2;
pub(crate) const BETA_STAR: u8 = 3;
pub(crate) const A: u8 = 0;
pub(crate) const B: u8 = 1;
pub(crate) const B_STAR: u8 = 2;

/// One of the four fixed presentations together with its coefficient context.
///
/// Normal words are `α^k β^m β*^n`, `α*^k β^m β*^n` for SU_q(2) and
/// `a^k b^m`, `a^k b*^m` for the spheres.
#[derive(Debug, Clone)]
pub struct AlgebraPreset<C: Coeff> {
    pub id: AlgebraId,
    pub generators: Vec<GeneratorInfo>,
    pub rules: Vec<Rule<C>>,
    pub ctx: C::Ctx,
    table: Vec<Vec<Option<usize>>>,
}

fn gens(list: &[(&'static str, u8)]) -> Vec<GeneratorInfo> {
    list.iter().map(|&(name, star)| GeneratorInfo { name, star }).collect()
}

impl<C: Coeff> AlgebraPreset<C> {
    pub fn new(id: AlgebraId, ctx: C::Ctx) -> Self {
        let qp = |twice: i32| C::q_pow(&ctx, HalfInt::from_twice(twice));
        let mono = |w: &[u8], c: C| NCPoly::monomial(w.to_vec(), c);
        let one = || NCPoly::<C>::one();
        let (generators, rules) = match id {
            AlgebraId::SUq2 => (
                gens(&[("alpha", ALPHA_STAR), ("beta", BETA_STAR), ("alphastar", ALPHA), ("betastar", BETA)]),
                vec![
                    Rule { lhs: [BETA, ALPHA], rhs: mono(&[ALPHA, BETA], qp(-2)) },
                    Rule { lhs: [BETA_STAR, ALPHA], rhs: mono(&[ALPHA, BETA_STAR], qp(-2)) },
                    Rule { lhs: [BETA_STAR, BETA], rhs: mono(&[BETA, BETA_STAR], C::one()) },
                    Rule { lhs: [BETA, ALPHA_STAR], rhs: mono(&[ALPHA_STAR, BETA], qp(2)) },
                    Rule { lhs: [BETA_STAR, ALPHA_STAR], rhs: mono(&[ALPHA_STAR, BETA_STAR], qp(2)) },
                    Rule { lhs: [ALPHA_STAR, ALPHA], rhs: one() - mono(&[BETA, BETA_STAR], C::one()) },
                    Rule { lhs: [ALPHA, ALPHA_STAR], rhs: one() - mono(&[BETA, BETA_STAR], qp(4)) },
                ],
            ),
            AlgebraId::PodlesStandard => (
                gens(&[("a", A), ("b", B_STAR), ("bstar", B)]),
                vec![
                    Rule { lhs: [B, A], rhs: mono(&[A, B], qp(-4)) },
                    Rule { lhs: [B_STAR, A], rhs: mono(&[A, B_STAR], qp(4)) },
                    Rule { lhs: [B, B_STAR], rhs: mono(&[A], qp(-4)) - mono(&[A, A], qp(-4)) },
                    Rule { lhs: [B_STAR, B], rhs: mono(&[A], C::one()) - mono(&[A, A], qp(4)) },
                ],
            ),
            AlgebraId::PodlesEquatorial => (
                gens(&[("a", A), ("b", B_STAR), ("bstar", B)]),
                vec![
                    Rule { lhs: [B, A], rhs: mono(&[A, B], qp(4)) },
                    Rule { lhs: [B_STAR, A], rhs: mono(&[A, B_STAR], qp(-4)) },
                    Rule { lhs: [B, B_STAR], rhs: one() - mono(&[A, A], qp(8)) },
                    Rule { lhs: [B_STAR, B], rhs: one() - mono(&[A, A], C::one()) },
                ],
            ),
            AlgebraId::PodlesGeneric => {
                let c = NCPoly::scalar(C::sphere_param(&ctx));
                (
                    gens(&[("a", A), ("b", B_STAR), ("bstar", B)]),
                    vec![
                        Rule { lhs: [B, A], rhs: mono(&[A, B], qp(4)) },
                        Rule { lhs: [B_STAR, A], rhs: mono(&[A, B_STAR], qp(-4)) },
                        Rule { lhs: [B, B_STAR], rhs: c.clone() + mono(&[A], qp(4)) - mono(&[A, A], qp(8)) },
                        Rule { lhs: [B_STAR, B], rhs: c + mono(&[A], C::one()) - mono(&[A, A], C::one()) },
                    ],
                )
            }
        };
        let n = generators.len();
        let mut table = vec![vec![None; n]; n];
        for (i, r) in rules.iter().enumerate() {
            table[r.lhs[0] as usize][r.lhs[1] as usize] = Some(i);
        }
        AlgebraPreset { id, generators, rules, ctx, table }
    }

    pub fn su_q2(ctx: C::Ctx) -> Self {
        Self::new(AlgebraId::SUq2, ctx)
    }

    pub fn podles_standard(ctx: C::Ctx) -> Self {
        Self::new(AlgebraId::PodlesStandard, ctx)
    }

    pub fn podles_equatorial(ctx: C::Ctx) -> Self {
        Self::new(AlgebraId::PodlesEquatorial, ctx)
    }

    pub fn podles_generic(ctx: C::Ctx) -> Self {
        Self::new(AlgebraId::PodlesGeneric, ctx)
    }

    pub fn name(&self) -> &'static str {
        self.id.name()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<u8> {
        self.generators.iter().position(|g| g.name == name).map(|i| i as u8)
    }

    pub fn q_pow(&self, x: HalfInt) -> C {
        C::q_pow(&self.ctx, x)
    }

    pub fn gen(&self, name: &str) -> NCPoly<C> {
        let g = self.generator_index(name).unwrap_or_else(|| panic!("{} has no generator {name}", self.name()));
        NCPoly::generator(g)
    }

    fn redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        w.windows(2).enumerate().find_map(|(i, p)| self.table[p[0] as usize][p[1] as usize].map(|r| (i, r)))
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.redex(w).is_none()
    }

    /// Reduce to the unique normal form. Like terms are merged after every
    /// rewriting round so that cancellations happen early.
    pub fn normal_form(&self, p: &NCPoly<C>) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        let mut pending = p.clone();
        while !pending.is_zero() {
            let mut next = NCPoly::zero();
            for (w, c) in pending.into_terms() {
                match self.redex(&w) {
                    None => out.add_term(w, c),
                    Some((i, r)) => {
                        for (rw, rc) in self.rules[r].rhs.terms() {
                            let mut nw = Vec::with_capacity(w.len() + rw.len());
                            nw.extend_from_slice(&w[..i]);
                            nw.extend_from_slice(rw);
                            nw.extend_from_slice(&w[i + 2..]);
                            next.add_term(nw, c.clone() * rc.clone());
                        }
                    }
                }
            }
            pending = next;
        }
        out
    }

    pub fn mul(&self, x: &NCPoly<C>, y: &NCPoly<C>) -> NCPoly<C> {
        self.normal_form(&x.concat(y))
    }

    pub fn product(&self, factors: &[NCPoly<C>]) -> NCPoly<C> {
        factors.iter().fold(NCPoly::one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, x: &NCPoly<C>, n: u32) -> NCPoly<C> {
        (0..n).fold(NCPoly::one(), |acc, _| self.mul(&acc, x))
    }

    /// Involution: reverse words and star each letter. Coefficients are real
    /// (q and c are real), so they are left alone.
    pub fn star(&self, p: &NCPoly<C>) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let sw: Word = w.iter().rev().map(|&g| self.generators[g as usize].star).collect();
            out.add_term(sw, c.clone());
        }
        self.normal_form(&out)
    }

    /// Defining relations as polynomials that vanish in the algebra.
    pub fn relations(&self) -> Vec<NCPoly<C>> {
        self.rules.iter().map(|r| NCPoly::word(&r.lhs) - r.rhs.clone()).collect()
    }

    /// Resolve every overlap `xyz` where both `xy` and `yz` are left sides.
    pub fn critical_pairs(&self) -> Vec<CriticalPair> {
        let mut out = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                if r1.lhs[1] != r2.lhs[0] {
                    continue;
                }
                let x = NCPoly::generator(r1.lhs[0]);
                let z = NCPoly::generator(r2.lhs[1]);
                let left = self.normal_form(&r1.rhs.concat(&z));
                let right = self.normal_form(&x.concat(&r2.rhs));
                out.push(CriticalPair { word: vec![r1.lhs[0], r1.lhs[1], r2.lhs[1]], residual: (left - right).max_magnitude() });
            }
        }
        out
    }

    /// Largest critical-pair residual; zero for a confluent system.
    pub fn confluence_defect(&self) -> f64 {
        self.critical_pairs().iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn word_to_string(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&g| self.generators[g as usize].name).collect::<Vec<_>>().join("*")
    }

    /// Human-readable form, one `(coeff) word` per term.
    pub fn format(&self, p: &NCPoly<C>) -> String {
        if p.is_zero() {
            return "0".into();
        }
        p.terms().map(|(w, c)| format!("({c:?}) {}", self.word_to_string(w))).collect::<Vec<_>>().join(" + ")
    }
}
