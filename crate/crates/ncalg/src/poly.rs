use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::Coeff;

/// A word in the generators, as indices into the preset's generator list.
pub type Word = Vec<u8>;

/// Formal noncommutative polynomial. Not necessarily in normal form; the
/// algebra presets reduce it.
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Default for NCPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> NCPoly<C> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::monomial(Word::new(), c)
    }

    pub fn monomial(w: Word, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn generator(g: u8) -> Self {
        Self::monomial(vec![g], C::one())
    }

    pub fn word(w: &[u8]) -> Self {
        Self::monomial(w.to_vec(), C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &[u8]) -> Option<&C> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Concatenation product, without reduction.
    pub fn concat(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x.clone() * y.clone());
            }
        }
        out
    }

    /// Longest word length, 0 for scalars and the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Largest coefficient magnitude; the size of a residual.
    pub fn max_magnitude(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    /// Drop terms whose coefficient magnitude is at most `tol`.
    pub fn pruned(&self, tol: f64) -> Self {
        NCPoly { terms: self.terms.iter().filter(|(_, c)| c.magnitude() > tol).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> NCPoly<D> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }
}

impl<C: Coeff> Add for NCPoly<C> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (w, c) in o.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<C: Coeff> Neg for NCPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        NCPoly { terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect() }
    }
}

impl<C: Coeff> Sub for NCPoly<C> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}
