use std::sync::Arc;

use ncalg::{AlgebraId, NCPoly};
use num_complex::Complex;
use qcore::HalfInt;
use reps::{haar_state, BasisLabel, RepError, Representation};

const Q: f64 = 0.5;
const ALPHA: u8 = 0;
const BETA: u8 = 1;
const ALPHA_STAR: u8 = 2;
const BETA_STAR: u8 = 3;

fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn column(rep: &Representation<f64>, g: u8, lab: BasisLabel) -> Vec<(BasisLabel, Complex<f64>)> {
    let m = rep.generator(g);
    let c = rep.basis.index_of(&lab).unwrap();
    (0..m.nrows()).filter_map(|r| {
        let v = m.get(r, c);
        (v.norm() > 0.0).then(|| (rep.basis.label(r), v))
    }).collect()
}

fn worst_relation(rep: &Representation<f64>) -> f64 {
    rep.relation_residuals().into_iter().map(|(_, r)| r).fold(0.0, f64::max)
}

#[test]
fn beta_on_the_vacuum() {
    let rep = Representation::left_regular(h(4), Q).unwrap();
    let col = column(&rep, BETA, BasisLabel::L2 { l: h(0), i: h(0), j: h(0) });
    assert_eq!(col.len(), 1);
    assert_eq!(col[0].0, BasisLabel::L2 { l: h(1), i: h(1), j: h(-1) });
    let want = -(1.0 - Q * Q).sqrt() / (1.0 - Q.powi(4)).sqrt();
    assert!((col[0].1.re - want).abs() < 1e-15 && col[0].1.im == 0.0);
}

#[test]
fn left_regular_relations_at_default_truncation() {
    let rep = Representation::left_regular(h(20), Q).unwrap();
    assert_eq!(rep.dim(), 3311);
    let r = rep.relation_residuals();
    assert_eq!(r.len(), 7);
    for (name, v) in r {
        assert!(v < 1e-12, "{name}: {v}");
    }
}

#[test]
fn unitarity_relations_directly() {
    let rep = Representation::left_regular(h(12), Q).unwrap();
    let (a, b) = (rep.generator(ALPHA), rep.generator(BETA));
    let (as_, bs) = (rep.generator(ALPHA_STAR), rep.generator(BETA_STAR));
    let id = reps::OperatorMatrix::identity(rep.basis.clone());
    let mask = rep.interior_mask(2);
    let one = Complex::new(1.0, 0.0);
    let r1 = as_.mul(a).add_scaled(&bs.mul(b), one).sub(&id).frobenius_masked(&mask);
    let r2 = a.mul(as_).add_scaled(&b.mul(bs), Complex::new(Q * Q, 0.0)).sub(&id).frobenius_masked(&mask);
    let r3 = a.mul(b).sub(&b.mul(a).scale_real(Q)).frobenius_masked(&mask);
    assert!(r1 < 1e-12 && r2 < 1e-12 && r3 < 1e-12, "{r1} {r2} {r3}");
}

#[test]
fn spinorial_relations_at_default_truncation() {
    let rep = Representation::spinorial(h(20), Q).unwrap();
    assert_eq!(rep.dim(), 6622);
    for (name, v) in rep.relation_residuals() {
        assert!(v < 1e-12, "{name}: {v}");
    }
}

#[test]
fn bk_relations() {
    let rep = Representation::bibikov_kulish(h(12), Q).unwrap();
    assert!(worst_relation(&rep) < 1e-12);
}

#[test]
fn starred_generators_are_adjoints() {
    for rep in [Representation::left_regular(h(6), Q).unwrap(), Representation::spinorial(h(6), Q).unwrap()] {
        for (g, gs) in [(ALPHA, ALPHA_STAR), (BETA, BETA_STAR)] {
            // W (X ⊗ 1) W† and W (X† ⊗ 1) W† round differently
            assert!(rep.generator(g).adjoint().sub(rep.generator(gs)).max_abs() < 1e-15);
        }
    }
}

#[test]
fn podles_relations_at_default_truncation() {
    for rep in [Representation::podles_standard(h(41), Q).unwrap(), Representation::podles_equatorial(h(41), Q).unwrap()] {
        assert_eq!(rep.dim(), 924);
        let mask = rep.interior_mask(1);
        let a = rep.generator(0);
        assert!(a.sub(&a.adjoint()).frobenius_masked(&mask) < 1e-13);
        for (name, v) in rep.relation_residuals() {
            assert!(v < 1e-12, "{:?} {name}: {v}", rep.family);
        }
    }
}

#[test]
fn podles_blocks_do_not_mix() {
    for rep in [Representation::podles_standard(h(15), Q).unwrap(), Representation::podles_equatorial(h(15), Q).unwrap()] {
        for g in 0..3 {
            for (r, c, _) in rep.generator(g).entries() {
                let (BasisLabel::Podles { s: sr, .. }, BasisLabel::Podles { s: sc, .. }) = (rep.basis.label(r), rep.basis.label(c)) else {
                    unreachable!()
                };
                assert_eq!(sr, sc);
            }
        }
    }
}

#[test]
fn standard_sphere_relations_by_hand() {
    let rep = Representation::podles_standard(h(21), Q).unwrap();
    let (a, b, bs) = (rep.generator(0), rep.generator(1), rep.generator(2));
    let id = reps::OperatorMatrix::identity(rep.basis.clone());
    let mask = rep.interior_mask(2);
    let q2 = Q * Q;
    let r1 = a.mul(b).sub(&b.mul(a).scale_real(q2)).frobenius_masked(&mask);
    // b b* = q^{-2} a (1 - a), b* b = a (1 - q² a)
    let one_minus_a = id.sub(a);
    let r2 = b.mul(bs).sub(&a.mul(&one_minus_a).scale_real(1.0 / q2)).frobenius_masked(&mask);
    let r3 = bs.mul(b).sub(&a.mul(&id.sub(&a.scale_real(q2)))).frobenius_masked(&mask);
    assert!(r1 < 1e-12 && r2 < 1e-12 && r3 < 1e-12, "{r1} {r2} {r3}");
}

#[test]
fn equatorial_relations_by_hand() {
    let rep = Representation::podles_equatorial(h(21), Q).unwrap();
    let (a, b, bs) = (rep.generator(0), rep.generator(1), rep.generator(2));
    let id = reps::OperatorMatrix::identity(rep.basis.clone());
    let mask = rep.interior_mask(2);
    let r1 = bs.mul(b).add(&a.mul(a)).sub(&id).frobenius_masked(&mask);
    let r2 = b.mul(a).sub(&a.mul(b).scale_real(Q * Q)).frobenius_masked(&mask);
    assert!(r1 < 1e-12 && r2 < 1e-12, "{r1} {r2}");
}

#[test]
fn equatorial_middle_term_of_a() {
    let rep = Representation::podles_equatorial(h(5), Q).unwrap();
    let lab = BasisLabel::Podles { l: h(1), s: 1, m: h(1) };
    let k = rep.basis.index_of(&lab).unwrap();
    let q = Q;
    let want = -(1.0 - q * q) * (1.0 + q.powi(4) - 1.0 - q * q) / ((1.0 - q * q) * (1.0 - q.powi(6)));
    assert!((rep.generator(0).get(k, k).re - want).abs() < 1e-15);
}

#[test]
fn standard_middle_term_of_a() {
    // corrected leading sign: the diagonal entries of a must make b b* = q^{-2} a(1 - a)
    // hold; at ℓ = ½ the diagonal is one of two roots and we check the value
    let rep = Representation::podles_standard(h(5), Q).unwrap();
    let q = Q;
    for s in [-1i8, 1] {
        let sf = s as f64;
        let (l, m) = (0.5f64, 0.5f64);
        let mid = (1.0 - q.powf(2.0 * l - 1.0)) * (1.0 - q.powf(2.0 * l + 3.0)) - sf * q.powf(2.0 * l + sf) * (1.0 - q * q);
        let want = 1.0 / (1.0 + q * q)
            + (-1.0 - q.powf(4.0 * l + 2.0) + q.powf(2.0 * l + 2.0 * m) + q.powf(2.0 * l + 2.0 * m + 2.0)) * mid
                / ((1.0 + q * q) * (1.0 - q.powf(4.0 * l)) * (1.0 - q.powf(4.0 * l + 4.0)));
        let k = rep.basis.index_of(&BasisLabel::Podles { l: h(1), s, m: h(1) }).unwrap();
        assert!((rep.generator(0).get(k, k).re - want).abs() < 1e-15);
        assert!(want > 0.0 && want < 1.0 + 1e-15, "a is a positive contraction: {want}");
    }
}

#[test]
fn standard_a_spectrum_lies_in_the_unit_interval() {
    // 0 ≤ a ≤ 1 follows from b* b = a (1 - q² a) ≥ 0 and b b* = q^{-2} a (1 - a) ≥ 0;
    // every diagonal entry of a is a Rayleigh quotient
    let rep = Representation::podles_standard(h(21), Q).unwrap();
    let a = rep.generator(0);
    for k in 0..rep.dim() {
        let v = a.get(k, k).re;
        assert!((-1e-14..=1.0 + 1e-14).contains(&v), "{} -> {v}", rep.basis.label(k));
    }
}

#[test]
fn generic_sphere() {
    let rep = Representation::podles_generic(30, Q, 2.0).unwrap();
    for (name, v) in rep.relation_residuals() {
        assert!(v < 1e-12, "{name}: {v}");
    }
    let a = rep.generator(0);
    let k = rep.basis.index_of(&BasisLabel::Generic { n: 0, s: 1 }).unwrap();
    assert!((a.get(k, k).re - 2.0).abs() < 1e-15);
    let k = rep.basis.index_of(&BasisLabel::Generic { n: 0, s: -1 }).unwrap();
    assert!((a.get(k, k).re + 1.0).abs() < 1e-15);
    // distinct (n, s) up to 12 give distinct eigenvalues of a
    let mut ev: Vec<f64> = rep.basis.labels().iter().enumerate().filter(|(_, l)| l.level() <= h(24)).map(|(k, _)| a.get(k, k).re).collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    assert!(ev.windows(2).all(|w| w[1] - w[0] > 1e-9));
    // b* b + a² - a = c, directly
    let b = rep.generator(1);
    let mask = rep.interior_mask(2);
    let id = reps::OperatorMatrix::identity(rep.basis.clone());
    let r = b.adjoint().mul(b).add(&a.mul(a)).sub(a).sub(&id.scale_real(2.0)).frobenius_masked(&mask);
    assert!(r < 1e-12);
}

#[test]
fn generic_sphere_rejects_bad_parameters() {
    assert!(matches!(Representation::podles_generic(10, Q, -1.0), Err(RepError::BadParameter(_))));
    assert!(matches!(Representation::podles_generic(0, Q, 1.0), Err(RepError::BadParameter(_))));
    assert!(Representation::<f64>::left_regular(h(2), 1.5).is_err());
    assert!(Representation::<f64>::podles_standard(h(4), 0.5).is_err());
}

#[test]
fn shift_representation() {
    let rep = Representation::shift(30, 30, Q).unwrap();
    for (name, v) in rep.relation_residuals() {
        assert!(v < 1e-12, "{name}: {v}");
    }
    let a = rep.generator(ALPHA);
    for j in -3..=3 {
        let c = rep.basis.index_of(&BasisLabel::Shift { i: 0, j }).unwrap();
        assert!((0..rep.dim()).all(|r| a.get(r, c).norm() == 0.0));
    }
    // α*α + β*β = 1 holds without rounding on the interior
    let (as_, b, bs) = (rep.generator(ALPHA_STAR), rep.generator(BETA), rep.generator(BETA_STAR));
    let s = as_.mul(a).add(&bs.mul(b));
    let mask = rep.interior_mask(2);
    for k in (0..rep.dim()).filter(|&k| mask[k]) {
        assert!((s.get(k, k).re - 1.0).abs() < 1e-15);
    }
}

#[test]
fn evaluate_basics() {
    let rep = Representation::podles_standard(h(9), Q).unwrap();
    let e = rep.evaluate(&NCPoly::one());
    assert_eq!(e.matrix.sub(&reps::OperatorMatrix::identity(rep.basis.clone())).max_abs(), 0.0);
    assert_eq!(e.margin, HalfInt::ZERO);
    let e = rep.evaluate(&NCPoly::generator(1));
    assert_eq!(e.matrix.sub(rep.generator(1)).max_abs(), 0.0);
    assert_eq!(e.margin, HalfInt::ONE);
    let alg = rep.preset();
    assert_eq!(alg.id, AlgebraId::PodlesStandard);
    let p = alg.mul(&alg.gen("a"), &alg.gen("b"));
    let e = rep.evaluate(&p);
    assert_eq!(e.margin, h(4));
    let direct = rep.generator(0).mul(rep.generator(1));
    assert!(e.matrix.sub(&direct).max_abs() < 1e-15);
}

#[test]
fn haar_state_values() {
    let one = NCPoly::<f64>::one();
    assert!((haar_state(&one, Q).unwrap().re - 1.0).abs() < 1e-15);
    assert!(haar_state(&NCPoly::generator(BETA), Q).unwrap().norm() < 1e-15);
    let bsb = NCPoly::word(&[BETA_STAR, BETA]);
    assert!((haar_state(&bsb, Q).unwrap().re - 1.0 / (1.0 + Q * Q)).abs() < 1e-15);
    // χ(β^m β*^m) = (1 - q²)/(1 - q^{2m+2}), and zero off the diagonal words
    for m in 0..5 {
        let mut w = vec![BETA; m];
        w.extend(vec![BETA_STAR; m]);
        let v = haar_state(&NCPoly::word(&w), Q).unwrap().re;
        let want = (1.0 - Q * Q) / (1.0 - Q.powi(2 * m as i32 + 2));
        assert!((v - want).abs() < 1e-14, "m={m}: {v} vs {want}");
    }
    for w in [vec![ALPHA], vec![ALPHA, BETA_STAR], vec![BETA, BETA], vec![ALPHA, ALPHA, BETA]] {
        assert!(haar_state(&NCPoly::word(&w), Q).unwrap().norm() < 1e-15, "{w:?}");
    }
    // α α* = 1 - q² β β*
    let v = haar_state(&NCPoly::word(&[ALPHA, ALPHA_STAR]), Q).unwrap().re;
    assert!((v - 1.0 / (1.0 + Q * Q)).abs() < 1e-15);
}

#[test]
fn haar_state_needs_enough_room() {
    let rep = Representation::left_regular(h(4), Q).unwrap();
    let p = NCPoly::word(&[BETA, BETA, BETA_STAR, BETA_STAR]);
    assert!(rep.haar_state(&p).is_ok());
    let p = NCPoly::word(&[BETA, BETA, BETA, BETA_STAR, BETA_STAR, BETA_STAR]);
    assert!(matches!(rep.haar_state(&p), Err(RepError::TruncationTooSmall { .. })));
    let sphere = Representation::podles_standard(h(3), Q).unwrap();
    assert!(matches!(sphere.haar_state(&NCPoly::one()), Err(RepError::WrongFamily(_))));
}

fn interior_stable(small: &Representation<f64>, big: &Representation<f64>) {
    let mask = small.interior_mask(1);
    for g in 0..small.generators().len() as u8 {
        for (r, c, v) in small.generator(g).entries() {
            if !(mask[r] && mask[c]) {
                continue;
            }
            let w = big.generator(g).get_labels(&small.basis.label(r), &small.basis.label(c));
            assert_eq!(v, w, "{:?} generator {g}", small.family);
        }
        // nothing the small matrix misses between interior labels
        for (r, c, w) in big.generator(g).entries() {
            let (Some(r2), Some(c2)) = (small.basis.index_of(&big.basis.label(r)), small.basis.index_of(&big.basis.label(c))) else {
                continue;
            };
            if mask[r2] && mask[c2] {
                assert_eq!(small.generator(g).get(r2, c2), w);
            }
        }
    }
}

#[test]
fn interior_entries_do_not_depend_on_the_cutoff() {
    interior_stable(&Representation::left_regular(h(10), Q).unwrap(), &Representation::left_regular(h(14), Q).unwrap());
    interior_stable(&Representation::spinorial(h(10), Q).unwrap(), &Representation::spinorial(h(14), Q).unwrap());
    interior_stable(&Representation::podles_standard(h(11), Q).unwrap(), &Representation::podles_standard(h(15), Q).unwrap());
    interior_stable(&Representation::podles_equatorial(h(11), Q).unwrap(), &Representation::podles_equatorial(h(15), Q).unwrap());
    interior_stable(&Representation::shift(10, 10, Q).unwrap(), &Representation::shift(12, 12, Q).unwrap());
    interior_stable(&Representation::podles_generic(10, Q, 0.7).unwrap(), &Representation::podles_generic(12, Q, 0.7).unwrap());
}

#[test]
fn coordinate_export() {
    let rep = Representation::podles_standard(h(3), Q).unwrap();
    let mut buf = Vec::new();
    rep.generator(1).write_coo(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), rep.generator(1).nnz());
    let _ = Arc::clone(&rep.basis);
}
