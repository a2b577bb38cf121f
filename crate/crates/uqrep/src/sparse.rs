use std::io::{self, Write};
use std::sync::Arc;

use num_complex::Complex;
use num_traits::{One, Zero};
use qcore::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Basis, BasisLabel};

/// Complex operator between two labelled bases, stored by rows with sorted
/// column indices. Exact zeros are never stored.
#[derive(Debug, Clone)]
pub struct OperatorMatrix<T> {
    rows: Arc<Basis>,
    cols: Arc<Basis>,
    data: Vec<Vec<(usize, Complex<T>)>>,
}

/// Settings for the seeded power iteration.
#[derive(Debug, Clone, Copy)]
pub struct PowerIteration {
    pub seed: u64,
    pub max_iter: usize,
    pub rel_tol: f64,
}

impl Default for PowerIteration {
    fn default() -> Self {
        PowerIteration { seed: 0x5eed, max_iter: 200, rel_tol: 1e-10 }
    }
}

fn merge_row<T: Scalar>(mut row: Vec<(usize, Complex<T>)>) -> Vec<(usize, Complex<T>)> {
    row.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, Complex<T>)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

impl<T: Scalar> OperatorMatrix<T> {
    pub fn zeros(rows: Arc<Basis>, cols: Arc<Basis>) -> Self {
        let n = rows.len();
        OperatorMatrix { rows, cols, data: vec![Vec::new(); n] }
    }

    pub fn identity(basis: Arc<Basis>) -> Self {
        Self::diagonal(basis, |_| Complex::one())
    }

    pub fn diagonal(basis: Arc<Basis>, f: impl Fn(&BasisLabel) -> Complex<T>) -> Self {
        let data = basis
            .labels()
            .iter()
            .enumerate()
            .map(|(k, l)| {
                let v = f(l);
                if v.is_zero() {
                    vec![]
                } else {
                    vec![(k, v)]
                }
            })
            .collect();
        OperatorMatrix { rows: basis.clone(), cols: basis, data }
    }

    pub fn real_diagonal(basis: Arc<Basis>, f: impl Fn(&BasisLabel) -> T) -> Self {
        Self::diagonal(basis, |l| Complex::new(f(l), T::zero()))
    }

    /// Build column by column: `f(c)` lists the image of basis vector `c`.
    /// Images outside the row basis are dropped (truncation).
    pub fn from_columns(rows: Arc<Basis>, cols: Arc<Basis>, f: impl Fn(&BasisLabel) -> Vec<(BasisLabel, Complex<T>)>) -> Self {
        let mut trip = Vec::new();
        for (c, lab) in cols.labels().iter().enumerate() {
            for (rl, v) in f(lab) {
                if let Some(r) = rows.index_of(&rl) {
                    trip.push((r, c, v));
                }
            }
        }
        Self::from_triplets(rows, cols, trip)
    }

    pub fn from_triplets(rows: Arc<Basis>, cols: Arc<Basis>, trip: impl IntoIterator<Item = (usize, usize, Complex<T>)>) -> Self {
        let mut data = vec![Vec::new(); rows.len()];
        for (r, c, v) in trip {
            assert!(c < cols.len(), "column index out of range");
            data[r].push((c, v));
        }
        let data = data.into_iter().map(merge_row).collect();
        OperatorMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> &Arc<Basis> {
        &self.rows
    }

    pub fn cols(&self) -> &Arc<Basis> {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.data.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, Complex<T>)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Complex<T> {
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.data[r][k].1,
            Err(_) => Complex::zero(),
        }
    }

    pub fn get_labels(&self, r: &BasisLabel, c: &BasisLabel) -> Complex<T> {
        match (self.rows.index_of(r), self.cols.index_of(c)) {
            (Some(r), Some(c)) => self.get(r, c),
            _ => Complex::zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Complex<T>)> + '_ {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c, v)))
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        let data = self.data.iter().map(|row| merge_row(row.iter().map(|&(c, v)| (c, f(v))).collect())).collect();
        OperatorMatrix { rows: self.rows.clone(), cols: self.cols.clone(), data }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        self.map(|v| v * s)
    }

    pub fn scale_real(&self, s: T) -> Self {
        self.map(|v| v * s)
    }

    /// Entrywise complex conjugate (the antilinear part of a real structure).
    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    pub fn transpose(&self) -> Self {
        let trip: Vec<_> = self.entries().map(|(r, c, v)| (c, r, v)).collect();
        Self::from_triplets(self.cols.clone(), self.rows.clone(), trip)
    }

    pub fn adjoint(&self) -> Self {
        let trip: Vec<_> = self.entries().map(|(r, c, v)| (c, r, v.conj())).collect();
        Self::from_triplets(self.cols.clone(), self.rows.clone(), trip)
    }

    fn combine(&self, o: &Self, s: Complex<T>) -> Self {
        assert!(self.nrows() == o.nrows() && self.ncols() == o.ncols(), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| merge_row(a.iter().cloned().chain(b.iter().map(|&(c, v)| (c, v * s))).collect()))
            .collect();
        OperatorMatrix { rows: self.rows.clone(), cols: self.cols.clone(), data }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, Complex::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, -Complex::<T>::one())
    }

    /// `self + s · o`.
    pub fn add_scaled(&self, o: &Self, s: Complex<T>) -> Self {
        self.combine(o, s)
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.ncols(), o.nrows(), "shape mismatch");
        let mut acc = vec![Complex::<T>::zero(); o.ncols()];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; o.ncols()];
        let mut data = Vec::with_capacity(self.nrows());
        for row in &self.data {
            for &(k, a) in row {
                for &(c, b) in &o.data[k] {
                    if !mark[c] {
                        mark[c] = true;
                        touched.push(c);
                    }
                    acc[c] += a * b;
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &c in &touched {
                if !acc[c].is_zero() {
                    out.push((c, acc[c]));
                }
                acc[c] = Complex::zero();
                mark[c] = false;
            }
            touched.clear();
            data.push(out);
        }
        OperatorMatrix { rows: self.rows.clone(), cols: o.cols.clone(), data }
    }

    /// `[self, o] = self·o - o·self`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn apply(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        self.data.iter().map(|row| row.iter().fold(Complex::zero(), |s, &(c, v)| s + v * x[c])).collect()
    }

    /// `self† x` without forming the adjoint.
    pub fn apply_adjoint(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        let mut y = vec![Complex::zero(); self.ncols()];
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                y[c] += v.conj() * x[r];
            }
        }
        y
    }

    pub fn max_abs(&self) -> T {
        self.entries().fold(T::zero(), |m, (_, _, v)| m.max(v.norm()))
    }

    /// Frobenius norm of the compression to `mask × mask`.
    pub fn frobenius_masked(&self, mask: &[bool]) -> T {
        self.entries().filter(|(r, c, _)| mask[*r] && mask[*c]).fold(T::zero(), |s, (_, _, v)| s + v.norm_sqr()).sqrt()
    }

    pub fn frobenius(&self) -> T {
        self.entries().fold(T::zero(), |s, (_, _, v)| s + v.norm_sqr()).sqrt()
    }

    pub fn max_abs_masked(&self, mask: &[bool]) -> T {
        self.entries().filter(|(r, c, _)| mask[*r] && mask[*c]).fold(T::zero(), |m, (_, _, v)| m.max(v.norm()))
    }

    /// Keep only entries with row in `row_mask` and column in `col_mask`.
    pub fn compress(&self, row_mask: &[bool], col_mask: &[bool]) -> Self {
        let data = self
            .data
            .iter()
            .enumerate()
            .map(|(r, row)| if row_mask[r] { row.iter().filter(|e| col_mask[e.0]).cloned().collect() } else { vec![] })
            .collect();
        OperatorMatrix { rows: self.rows.clone(), cols: self.cols.clone(), data }
    }

    /// Operator norm of the compression to `mask × mask` by seeded power
    /// iteration on `P A† P A P`.
    pub fn op_norm_masked(&self, mask: &[bool], opts: PowerIteration) -> T {
        assert_eq!(self.nrows(), self.ncols());
        let n = self.ncols();
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut x: Vec<Complex<T>> = (0..n)
            .map(|k| {
                if mask[k] {
                    Complex::new(T::lit(rng.gen::<f64>() - 0.5), T::lit(rng.gen::<f64>() - 0.5))
                } else {
                    Complex::zero()
                }
            })
            .collect();
        let norm = |v: &[Complex<T>]| v.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt();
        let nx = norm(&x);
        if nx == T::zero() {
            return T::zero();
        }
        x.iter_mut().for_each(|z| *z = *z / nx);
        let mut est = T::zero();
        for _ in 0..opts.max_iter {
            let mut y = self.apply(&x);
            for (k, z) in y.iter_mut().enumerate() {
                if !mask[k] {
                    *z = Complex::zero();
                }
            }
            let s = norm(&y);
            let mut w = self.apply_adjoint(&y);
            for (k, z) in w.iter_mut().enumerate() {
                if !mask[k] {
                    *z = Complex::zero();
                }
            }
            let nw = norm(&w);
            let done = (s - est).abs() <= T::lit(opts.rel_tol) * s;
            est = s;
            if nw == T::zero() || done {
                break;
            }
            x = w.into_iter().map(|z| z / nw).collect();
        }
        est
    }

    pub fn op_norm(&self, opts: PowerIteration) -> T {
        self.op_norm_masked(&vec![true; self.ncols()], opts)
    }

    /// Dense copy, row-major; only for small operators.
    pub fn to_dense(&self) -> Vec<Vec<Complex<T>>> {
        let mut out = vec![vec![Complex::zero(); self.ncols()]; self.nrows()];
        for (r, c, v) in self.entries() {
            out[r][c] = v;
        }
        out
    }

    /// Coordinate text form: `row-label col-label re im` per stored entry.
    pub fn write_coo<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (r, c, v) in self.entries() {
            writeln!(w, "{}\t{}\t{:e}\t{:e}", self.rows.label(r), self.cols.label(c), v.re, v.im)?;
        }
        Ok(())
    }
}
