//! Matrix coefficients of the generators, as functions of the column label.
//! Each returns `(target label, coefficient)` pairs; targets outside the
//! truncation are dropped by the caller.

use qcore::{HalfInt, Scalar};
use uqrep::BasisLabel;

fn t<T: Scalar>(x: HalfInt) -> T {
    T::lit(x.to_f64())
}

fn sqrt_pos<T: Scalar>(x: T) -> T {
    x.max(T::zero()).sqrt()
}

/// `α` and `β` on `ε_{ℓ,i,j}` in the left regular representation.
pub fn left_regular<T: Scalar>(gen: u8, lab: &BasisLabel, q: T) -> Vec<(BasisLabel, T)> {
    let BasisLabel::L2 { l, i, j } = *lab else { panic!("left regular generator on a non-L² label") };
    let h = HalfInt::HALF;
    let (lf, i_f, jf): (T, T, T) = (t(l), t(i), t(j));
    let one = T::one();
    let two = T::lit(2.0);
    let p = |x: T| q.powf(x);
    let mut out = Vec::new();
    match gen {
        0 => {
            let up = p(two * lf + i_f + jf + one) * ((one - p(two * lf - two * jf + two)) * (one - p(two * lf - two * i_f + two))).sqrt()
                / ((one - p(T::lit(4.0) * lf + two)) * (one - p(T::lit(4.0) * lf + T::lit(4.0)))).sqrt();
            out.push((BasisLabel::L2 { l: l + h, i: i - h, j: j - h }, up));
            if l > HalfInt::ZERO {
                let dn = sqrt_pos((one - p(two * lf + two * jf)) * (one - p(two * lf + two * i_f)))
                    / ((one - p(T::lit(4.0) * lf)) * (one - p(T::lit(4.0) * lf + two))).sqrt();
                out.push((BasisLabel::L2 { l: l - h, i: i - h, j: j - h }, dn));
            }
        }
        1 => {
            let up = -p(lf + jf) * ((one - p(two * lf - two * jf + two)) * (one - p(two * lf + two * i_f + two))).sqrt()
                / ((one - p(T::lit(4.0) * lf + two)) * (one - p(T::lit(4.0) * lf + T::lit(4.0)))).sqrt();
            out.push((BasisLabel::L2 { l: l + h, i: i + h, j: j - h }, up));
            if l > HalfInt::ZERO {
                let dn = p(lf + i_f) * sqrt_pos((one - p(two * lf + two * jf)) * (one - p(two * lf - two * i_f)))
                    / ((one - p(T::lit(4.0) * lf)) * (one - p(T::lit(4.0) * lf + two))).sqrt();
                out.push((BasisLabel::L2 { l: l - h, i: i + h, j: j - h }, dn));
            }
        }
        _ => panic!("only the unstarred generators have explicit formulas"),
    }
    out.retain(|(lab, v)| *v != T::zero() && valid_l2(lab));
    out
}

fn valid_l2(lab: &BasisLabel) -> bool {
    match *lab {
        BasisLabel::L2 { l, i, j } => l >= HalfInt::ZERO && i.abs() <= l && j.abs() <= l,
        _ => true,
    }
}

/// `a` and `b` on `|ℓ, m, s>` for the standard Podleś sphere. `a` keeps
/// `m`, `b` raises it by one; both move `ℓ` by at most one.
pub fn podles_standard<T: Scalar>(gen: u8, lab: &BasisLabel, q: T) -> Vec<(BasisLabel, T)> {
    let BasisLabel::Podles { l, s, m } = *lab else { panic!("Podleś generator on a foreign label") };
    let (lf, mf): (T, T) = (t(l), t(m));
    let sf = T::lit(s as f64);
    let one = T::one();
    let c = |x: f64| T::lit(x);
    let p = |x: T| q.powf(x);
    let qq = q * q;
    // normalisations of the ℓ ± 1 terms
    let norm_up = ((one - p(c(4.0) * lf + c(4.0)))
        * (one + p(c(2.0) * lf + c(3.0)) + p(c(2.0) * lf + one) - p(c(6.0) * lf + c(7.0)) - p(c(6.0) * lf + c(5.0)) - p(c(8.0) * lf + c(8.0))))
    .sqrt();
    let norm_dn = ((one - p(c(4.0) * lf))
        * (one + p(c(2.0) * lf + one) + p(c(2.0) * lf - one) - p(c(6.0) * lf + one) - p(c(6.0) * lf - one) - p(c(8.0) * lf)))
    .sqrt();
    // shared middle factor (1 - q^{2ℓ-1})(1 - q^{2ℓ+3}) - s q^{2ℓ+s}(1 - q²)
    let mid = (one - p(c(2.0) * lf - one)) * (one - p(c(2.0) * lf + c(3.0))) - sf * p(c(2.0) * lf + sf) * (one - qq);
    let den0 = (one - p(c(4.0) * lf)) * (one - p(c(4.0) * lf + c(4.0)));
    let one_h = HalfInt::ONE;
    let mut out = Vec::new();
    match gen {
        0 => {
            let ap = -p(c(2.0) * lf + mf + one - sf / c(2.0))
                * ((one - p(c(2.0) * lf - c(2.0) * mf + c(2.0))) * (one - p(c(2.0) * lf + c(2.0) * mf + c(2.0)))).sqrt()
                / norm_up;
            let a0 = one / (one + qq)
                + (-one - p(c(4.0) * lf + c(2.0)) + p(c(2.0) * lf + c(2.0) * mf) + p(c(2.0) * lf + c(2.0) * mf + c(2.0))) * mid
                    / ((one + qq) * den0);
            let am = -p(c(2.0) * lf + mf - one - sf / c(2.0))
                * sqrt_pos((one - p(c(2.0) * lf - c(2.0) * mf)) * (one - p(c(2.0) * lf + c(2.0) * mf)))
                / norm_dn;
            out.push((BasisLabel::Podles { l: l + one_h, s, m }, ap));
            out.push((BasisLabel::Podles { l, s, m }, a0));
            out.push((BasisLabel::Podles { l: l - one_h, s, m }, am));
        }
        1 => {
            let m1 = m + one_h;
            let bp = p(lf - sf / c(2.0))
                * ((one - p(c(2.0) * lf + c(2.0) * mf + c(4.0))) * (one - p(c(2.0) * lf + c(2.0) * mf + c(2.0)))).sqrt()
                / norm_up;
            let b0 = -p(mf + lf) * sqrt_pos((one - p(c(2.0) * lf + c(2.0) * mf + c(2.0))) * (one - p(c(2.0) * lf - c(2.0) * mf))) * mid / den0;
            let bm = -p(c(2.0) * mf + c(3.0) * lf - sf / c(2.0))
                * sqrt_pos((one - p(c(2.0) * lf - c(2.0) * mf)) * (one - p(c(2.0) * lf - c(2.0) * mf - c(2.0))))
                / norm_dn;
            out.push((BasisLabel::Podles { l: l + one_h, s, m: m1 }, bp));
            out.push((BasisLabel::Podles { l, s, m: m1 }, b0));
            out.push((BasisLabel::Podles { l: l - one_h, s, m: m1 }, bm));
        }
        _ => panic!("only a and b have explicit formulas"),
    }
    out.retain(|(lab, v)| *v != T::zero() && valid_podles(lab));
    out
}

/// `a` and `b` on `|ℓ, m, s>` for the equatorial Podleś sphere; the middle
/// terms carry the block sign `s`.
pub fn podles_equatorial<T: Scalar>(gen: u8, lab: &BasisLabel, q: T) -> Vec<(BasisLabel, T)> {
    let BasisLabel::Podles { l, s, m } = *lab else { panic!("Podleś generator on a foreign label") };
    let (lf, mf): (T, T) = (t(l), t(m));
    let sf = T::lit(s as f64);
    let one = T::one();
    let c = |x: f64| T::lit(x);
    let p = |x: T| q.powf(x);
    let qq = q * q;
    let den0 = (one - p(c(4.0) * lf)) * (one - p(c(4.0) * lf + c(4.0)));
    let one_h = HalfInt::ONE;
    let mut out = Vec::new();
    match gen {
        0 => {
            let ap = -p(lf - mf) * ((one - p(c(2.0) * lf - c(2.0) * mf + c(2.0))) * (one - p(c(2.0) * lf + c(2.0) * mf + c(2.0)))).sqrt()
                / (one - p(c(4.0) * lf + c(4.0)));
            let a0 = -sf * p(c(2.0) * lf - one) * (one - qq)
                * (one + p(c(4.0) * lf + c(2.0)) - p(c(2.0) * lf - c(2.0) * mf) - p(c(2.0) * lf - c(2.0) * mf + c(2.0)))
                / den0;
            let am = -p(lf - mf - one) * sqrt_pos((one - p(c(2.0) * lf - c(2.0) * mf)) * (one - p(c(2.0) * lf + c(2.0) * mf)))
                / (one - p(c(4.0) * lf));
            out.push((BasisLabel::Podles { l: l + one_h, s, m }, ap));
            out.push((BasisLabel::Podles { l, s, m }, a0));
            out.push((BasisLabel::Podles { l: l - one_h, s, m }, am));
        }
        1 => {
            let m1 = m + one_h;
            let bp = p(c(2.0) * lf - c(2.0) * mf + one)
                * ((one - p(c(2.0) * lf + c(2.0) * mf + c(2.0))) * (one - p(c(2.0) * lf + c(2.0) * mf + c(4.0)))).sqrt()
                / (one - p(c(4.0) * lf + c(4.0)));
            let b0 = sf * p(c(3.0) * lf - mf - one) * (one - qq * qq)
                * sqrt_pos((one - p(c(2.0) * lf + c(2.0) * mf + c(2.0))) * (one - p(c(2.0) * lf - c(2.0) * mf)))
                / den0;
            let bm = -sqrt_pos((one - p(c(2.0) * lf - c(2.0) * mf)) * (one - p(c(2.0) * lf - c(2.0) * mf - c(2.0))))
                / (one - p(c(4.0) * lf));
            out.push((BasisLabel::Podles { l: l + one_h, s, m: m1 }, bp));
            out.push((BasisLabel::Podles { l, s, m: m1 }, b0));
            out.push((BasisLabel::Podles { l: l - one_h, s, m: m1 }, bm));
        }
        _ => panic!("only a and b have explicit formulas"),
    }
    out.retain(|(lab, v)| *v != T::zero() && valid_podles(lab));
    out
}

fn valid_podles(lab: &BasisLabel) -> bool {
    match *lab {
        BasisLabel::Podles { l, m, .. } => l >= HalfInt::HALF && m.abs() <= l,
        _ => true,
    }
}

/// `λ_± = ½ ± (c + ¼)^{½}`, the two roots of `λ² - λ = c`.
pub fn generic_lambda<T: Scalar>(s: i8, c: T) -> T {
    let half = T::lit(0.5);
    let r = (c + T::lit(0.25)).sqrt();
    if s > 0 {
        half + r
    } else {
        half - r
    }
}

/// Generic Podleś sphere: `a` is diagonal with eigenvalue `λ_s q^{2n}`, `b`
/// lowers `n` with coefficient `(λ_s q^{2n} - λ_s² q^{4n} + c)^{½}`.
pub fn podles_generic<T: Scalar>(gen: u8, lab: &BasisLabel, q: T, c: T) -> Vec<(BasisLabel, T)> {
    let BasisLabel::Generic { n, s } = *lab else { panic!("generic-sphere generator on a foreign label") };
    let lam = generic_lambda(s, c);
    let x = lam * q.powi(2 * n);
    match gen {
        0 => vec![(*lab, x)],
        1 => {
            if n == 0 {
                return vec![];
            }
            let rad = x - x * x + c;
            assert!(rad >= -T::epsilon() * T::lit(16.0) * (c.abs() + T::one()), "negative radicand {rad} at n={n}, s={s}");
            vec![(BasisLabel::Generic { n: n - 1, s }, sqrt_pos(rad))]
        }
        _ => panic!("only a and b have explicit formulas"),
    }
}

/// Shift representation: `α` lowers `i` with `(1 - q^{2i})^{½}`, `β` lowers
/// `j` with weight `q^i`.
pub fn shift<T: Scalar>(gen: u8, lab: &BasisLabel, q: T) -> Vec<(BasisLabel, T)> {
    let BasisLabel::Shift { i, j } = *lab else { panic!("shift generator on a foreign label") };
    match gen {
        0 if i > 0 => vec![(BasisLabel::Shift { i: i - 1, j }, (T::one() - q.powi(2 * i)).sqrt())],
        0 => vec![],
        1 => vec![(BasisLabel::Shift { i, j: j - 1 }, q.powi(i))],
        _ => panic!("only α and β have explicit formulas"),
    }
}
