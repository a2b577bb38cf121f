use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, One, ToPrimitive, Zero};

use crate::HalfInt;

/// Laurent polynomial `Σ c_k t^k` in the formal variable `t = q^{1/2}`.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<i32, R>,
}

impl<R: Clone + Num> LaurentPoly<R> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    /// `c · t^k`.
    pub fn monomial(k: i32, c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    /// `q^x = t^{2x}` for a half-integer `x`.
    pub fn q_pow(x: HalfInt) -> Self {
        Self::monomial(x.twice(), R::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &R)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i32) -> R {
        self.terms.get(&k).cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.push(*k, v.clone() * c.clone());
        }
        out
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// The substitution `t -> 1/t`, i.e. `q -> q^{-1}`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    fn push(&mut self, k: i32, c: R) {
        let entry = self.terms.remove(&k).unwrap_or_else(R::zero) + c;
        if !entry.is_zero() {
            self.terms.insert(k, entry);
        }
    }
}

impl<R: Clone + Num + ToPrimitive> LaurentPoly<R> {
    /// Evaluate at `t = q^{1/2}`.
    pub fn eval_q(&self, q: f64) -> f64 {
        let t = q.sqrt();
        self.terms.iter().map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * t.powi(*k)).sum()
    }
}

impl<R: Clone + Num> Add for LaurentPoly<R> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (k, c) in o.terms {
            self.push(k, c);
        }
        self
    }
}

impl<R: Clone + Num> Neg for LaurentPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly { terms: self.terms.into_iter().map(|(k, c)| (k, R::zero() - c)).collect() }
    }
}

impl<R: Clone + Num> Sub for LaurentPoly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Clone + Num> Mul for LaurentPoly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<'a, R: Clone + Num> Mul<&'a LaurentPoly<R>> for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, o: &LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.push(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<R: Clone + Num> Zero for LaurentPoly<R> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Clone + Num> One for LaurentPoly<R> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<R: Clone + Num + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match *k {
                0 => write!(f, "({c})")?,
                _ if k % 2 == 0 => write!(f, "({c})q^{}", k / 2)?,
                _ => write!(f, "({c})q^({k}/2)")?,
            }
        }
        Ok(())
    }
}

impl<R: Clone + Num + fmt::Display> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
