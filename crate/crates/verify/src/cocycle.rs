use std::cell::RefCell;
use std::collections::HashMap;

use ncalg::{embed_podles, AlgebraId, AlgebraPreset, FloatCtx, HopfSymbol, NCPoly, Side, Word};
use num_complex::Complex;
use qcore::HalfInt;
use reps::{BasisLabel, RepScalar, Representation};

use crate::norms::COMPOSITE_TOL;
use crate::{CheckResult, Verdict, VerifyError};

fn presets<T: RepScalar>(q: T) -> (AlgebraPreset<T>, AlgebraPreset<T>) {
    let ctx = FloatCtx::new(q);
    (AlgebraPreset::new(AlgebraId::SUq2, ctx), AlgebraPreset::new(AlgebraId::PodlesStandard, ctx))
}

/// `σ(x) = k² ▷ x`, the modular twist of the Haar state on the sphere.
pub fn sigma<T: RepScalar>(su: &AlgebraPreset<T>, x: &NCPoly<T>) -> Result<NCPoly<T>, VerifyError> {
    Ok(su.act_side(Side::Left, &[HopfSymbol::K, HopfSymbol::K], x)?)
}

/// `σ⁻¹(x) = k⁻² ▷ x`.
pub fn sigma_inv<T: RepScalar>(su: &AlgebraPreset<T>, x: &NCPoly<T>) -> Result<NCPoly<T>, VerifyError> {
    Ok(su.act_side(Side::Left, &[HopfSymbol::KInv, HopfSymbol::KInv], x)?)
}

/// `τ(a₀, a₁, a₂) = χ(a₀ (a₁ ◁ e)(a₂ ◁ f) − q² a₀ (a₁ ◁ f)(a₂ ◁ e))` for
/// standard-sphere polynomials, evaluated symbolically and paired with the
/// Haar state in the left regular representation truncated at `big_l`.
pub fn twisted_cocycle_tau<T: RepScalar>(a0: &NCPoly<T>, a1: &NCPoly<T>, a2: &NCPoly<T>, big_l: HalfInt, q: T) -> Result<Complex<T>, VerifyError> {
    let (su, pod) = presets(q);
    let e = |x: &NCPoly<T>| su.act_side(Side::Right, &[HopfSymbol::E], x);
    let f = |x: &NCPoly<T>| su.act_side(Side::Right, &[HopfSymbol::F], x);
    let (h0, h1, h2) = (embed_podles(&su, &pod, a0)?, embed_podles(&su, &pod, a1)?, embed_podles(&su, &pod, a2)?);
    let p1 = su.product(&[h0.clone(), e(&h1)?, f(&h2)?]);
    let p2 = su.product(&[h0, f(&h1)?, e(&h2)?]);
    let p = p1 - p2.scale(&(q * q));
    let rep = Representation::left_regular(big_l, q)?;
    Ok(rep.haar_state(&p)?)
}

/// Fast evaluator for many `τ` values on monomial arguments: `τ` is the
/// pairing of `π(a₀*) ε₀` with `π(a₁◁e) π(a₂◁f) ε₀ − q² π(a₁◁f) π(a₂◁e) ε₀`,
/// and both vectors are cached per argument word.
pub struct TauEvaluator<T: RepScalar> {
    su: AlgebraPreset<T>,
    pod: AlgebraPreset<T>,
    rep: Representation<T>,
    q: T,
    vacuum: Vec<Complex<T>>,
    left: RefCell<HashMap<Word, Vec<Complex<T>>>>,
    right: RefCell<HashMap<(Word, bool), Vec<Complex<T>>>>,
    pairs: RefCell<HashMap<(Word, Word), Vec<Complex<T>>>>,
    embedded: RefCell<HashMap<(Word, u8), NCPoly<T>>>,
}

impl<T: RepScalar> TauEvaluator<T> {
    /// `big_l` must be at least half the longest word applied to the vacuum.
    pub fn new(q: T, big_l: HalfInt) -> Result<Self, VerifyError> {
        let (su, pod) = presets(q);
        let rep = Representation::left_regular(big_l, q)?;
        let k0 = rep.basis.index_of(&BasisLabel::L2 { l: HalfInt::ZERO, i: HalfInt::ZERO, j: HalfInt::ZERO }).expect("vacuum");
        let mut vacuum = vec![Complex::new(T::lit(0.0), T::lit(0.0)); rep.dim()];
        vacuum[k0] = Complex::new(T::lit(1.0), T::lit(0.0));
        Ok(TauEvaluator {
            su,
            pod,
            rep,
            q,
            vacuum,
            left: Default::default(),
            right: Default::default(),
            pairs: Default::default(),
            embedded: Default::default(),
        })
    }

    /// Embedded sphere word, acted on by nothing (0), `◁e` (1) or `◁f` (2).
    fn embedded(&self, w: &[u8], how: u8) -> Result<NCPoly<T>, VerifyError> {
        if let Some(p) = self.embedded.borrow().get(&(w.to_vec(), how)) {
            return Ok(p.clone());
        }
        let h = embed_podles(&self.su, &self.pod, &NCPoly::word(w))?;
        let p = match how {
            0 => h,
            1 => self.su.act_side(Side::Right, &[HopfSymbol::E], &h)?,
            _ => self.su.act_side(Side::Right, &[HopfSymbol::F], &h)?,
        };
        self.embedded.borrow_mut().insert((w.to_vec(), how), p.clone());
        Ok(p)
    }

    fn apply(&self, p: &NCPoly<T>, v: &[Complex<T>]) -> Vec<Complex<T>> {
        let mut suffix: HashMap<Word, Vec<Complex<T>>> = HashMap::new();
        let mut out = vec![Complex::new(T::lit(0.0), T::lit(0.0)); v.len()];
        for (w, c) in p.terms() {
            let mut cur = v.to_vec();
            for k in (0..w.len()).rev() {
                let key = w[k..].to_vec();
                cur = match suffix.get(&key) {
                    Some(x) => x.clone(),
                    None => {
                        let x = self.rep.generator(w[k]).apply(&cur);
                        suffix.insert(key, x.clone());
                        x
                    }
                };
            }
            for (o, x) in out.iter_mut().zip(&cur) {
                *o = *o + *x * *c;
            }
        }
        out
    }

    /// `π(a₀)* ε₀`.
    fn left_vec(&self, w0: &[u8]) -> Result<Vec<Complex<T>>, VerifyError> {
        if let Some(v) = self.left.borrow().get(w0) {
            return Ok(v.clone());
        }
        let h = self.su.star(&self.embedded(w0, 0)?);
        let v = self.apply(&h, &self.vacuum);
        self.left.borrow_mut().insert(w0.to_vec(), v.clone());
        Ok(v)
    }

    /// `π(a ◁ e) ε₀` (`e = true`) or `π(a ◁ f) ε₀`.
    fn right_vec(&self, w: &[u8], e: bool) -> Result<Vec<Complex<T>>, VerifyError> {
        if let Some(v) = self.right.borrow().get(&(w.to_vec(), e)) {
            return Ok(v.clone());
        }
        let v = self.apply(&self.embedded(w, if e { 1 } else { 2 })?, &self.vacuum);
        self.right.borrow_mut().insert((w.to_vec(), e), v.clone());
        Ok(v)
    }

    fn pair_vec(&self, w1: &[u8], w2: &[u8]) -> Result<Vec<Complex<T>>, VerifyError> {
        let key = (w1.to_vec(), w2.to_vec());
        if let Some(v) = self.pairs.borrow().get(&key) {
            return Ok(v.clone());
        }
        let x = self.apply(&self.embedded(w1, 1)?, &self.right_vec(w2, false)?);
        let y = self.apply(&self.embedded(w1, 2)?, &self.right_vec(w2, true)?);
        let qq = self.q * self.q;
        let v: Vec<Complex<T>> = x.iter().zip(&y).map(|(a, b)| *a - *b * qq).collect();
        self.pairs.borrow_mut().insert(key, v.clone());
        Ok(v)
    }

    /// `τ` on three sphere words.
    pub fn tau(&self, w0: &[u8], w1: &[u8], w2: &[u8]) -> Result<Complex<T>, VerifyError> {
        let u = self.left_vec(w0)?;
        let v = self.pair_vec(w1, w2)?;
        Ok(u.iter().zip(&v).fold(Complex::new(T::lit(0.0), T::lit(0.0)), |s, (a, b)| s + a.conj() * b))
    }

    /// The scalar `c` with `σ⁻¹(w) = c w` for a sphere word `w`.
    pub fn sigma_inv_factor(&self, w: &[u8]) -> Result<T, VerifyError> {
        let h = self.embedded(w, 0)?;
        let s = sigma_inv(&self.su, &h)?;
        let Some((word, c)) = h.terms().next() else { return Ok(T::lit(1.0)) };
        Ok(*s.coeff(word).unwrap_or(&T::lit(0.0)) / *c)
    }
}

/// Sphere monomials of length at most `max_len` in the generators `a, b, b*`.
pub fn sphere_monomials(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    let mut layer = vec![Word::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..3u8 {
                let mut x = w.clone();
                x.push(g);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn cat(a: &[u8], b: &[u8]) -> Word {
    let mut w = a.to_vec();
    w.extend_from_slice(b);
    w
}

/// Worst `|τ(a₀,a₁,a₂) − τ(σ⁻¹(a₂),a₀,a₁)|` and worst twisted coboundary
/// `|(b_σ τ)(a₀,…,a₃)|` over all monomials of length ≤ `max_len`.
pub fn cocycle_residuals<T: RepScalar>(ev: &TauEvaluator<T>, max_len: usize) -> Result<(f64, f64), VerifyError> {
    let mons = sphere_monomials(max_len);
    let mut factor = HashMap::new();
    for m in &mons {
        factor.insert(m.clone(), ev.sigma_inv_factor(m)?);
    }
    let mut cyc = 0.0f64;
    for a0 in &mons {
        for a1 in &mons {
            for a2 in &mons {
                let lhs = ev.tau(a0, a1, a2)?;
                let rhs = ev.tau(a2, a0, a1)? * factor[a2];
                cyc = cyc.max((lhs - rhs).norm().as_f64());
            }
        }
    }
    let mut cob = 0.0f64;
    for a0 in &mons {
        for a1 in &mons {
            for a2 in &mons {
                for a3 in &mons {
                    let v = ev.tau(&cat(a0, a1), a2, a3)? - ev.tau(a0, &cat(a1, a2), a3)? + ev.tau(a0, a1, &cat(a2, a3))?
                        - ev.tau(&cat(a3, a0), a1, a2)? * factor[a3];
                    cob = cob.max(v.norm().as_f64());
                }
            }
        }
    }
    Ok((cyc, cob))
}

/// `χ(1) = 1`, `χ(β*β) = 1/(1+q²)`, and the cocycle residuals.
pub fn cocycle_suite<T: RepScalar>(q: T) -> Result<Vec<CheckResult>, VerifyError> {
    let (su, _) = presets(q);
    let mut out = Vec::new();
    let one = reps::haar_state(&NCPoly::one(), q)?;
    let bb = reps::haar_state(&su.mul(&su.gen("betastar"), &su.gen("beta")), q)?;
    let qf = q.as_f64();
    let haar_res = (one.re.as_f64() - 1.0).abs().max(one.im.as_f64().abs()).max((bb.re.as_f64() - 1.0 / (1.0 + qf * qf)).abs()).max(bb.im.as_f64().abs());
    let mut h = CheckResult::new("haar.values", "ds-standard");
    h.truncations = vec!["L=1".into()];
    h.residuals = vec![haar_res];
    h.tolerance = crate::norms::EXACT_TOL;
    h.verdict = Verdict::from_bool(haar_res < crate::norms::EXACT_TOL);
    out.push(h);

    let ev = TauEvaluator::new(q, HalfInt::from_int(6))?;
    let (cyc, cob) = cocycle_residuals(&ev, 2)?;
    for (id, r) in [("cocycle.twisted-cyclic", cyc), ("cocycle.coboundary", cob)] {
        let mut c = CheckResult::new(id, "ds-standard");
        c.truncations = vec!["L=6".into()];
        c.residuals = vec![r];
        c.tolerance = COMPOSITE_TOL;
        c.verdict = Verdict::from_bool(r < COMPOSITE_TOL);
        c.note = Some("monomials of length <= 2 in a, b, b*; twist sigma^-1 = k^-2 acting on the left".into());
        out.push(c);
    }
    Ok(out)
}
