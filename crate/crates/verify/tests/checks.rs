use ncalg::NCPoly;
use qcore::HalfInt;
use reps::{Cutoff, Representation};
use triples::{SpectralTriple, TripleKind};
use verify::*;

const Q: f64 = 0.5;

fn spin(twice: i32) -> Cutoff {
    Cutoff::Spin(HalfInt::from_twice(twice))
}

#[test]
fn standard_sphere_commutant_and_first_order_are_exact() {
    let t = SpectralTriple::build(TripleKind::ds_standard_default(), spin(13), Q).unwrap();
    let all = commutant_suite(&t).unwrap();
    assert_eq!(all.len(), 18);
    for r in all {
        assert!(r.passed() && r.worst() < 1e-12, "{r:?}");
    }
}

#[test]
fn unit_arguments_give_zero() {
    for kind in [TripleKind::ds_standard_default(), TripleKind::dlssv_default()] {
        let t = SpectralTriple::build(kind, spin(9), Q).unwrap();
        let g = NCPoly::generator(1);
        let r = check_commutant(&t, &NCPoly::one(), &g, "1,x").unwrap();
        assert_eq!(r.worst(), 0.0);
        let r = check_first_order(&t, &g, &NCPoly::one(), "x,1").unwrap();
        assert_eq!(r.worst(), 0.0);
    }
}

#[test]
fn dlssv_commutant_decays_and_is_not_exact() {
    let t = SpectralTriple::build(TripleKind::dlssv_default(), spin(16), Q).unwrap();
    let r = check_commutant(&t, &NCPoly::generator(0), &NCPoly::generator(1), "alpha,beta").unwrap();
    let ratio = r.decay_exponent.unwrap() / Q.ln();
    // decays at least as fast as q^j, i.e. lies in the ideal
    assert!(ratio > 0.85, "ratio {ratio}");
    // tail norms decrease
    assert!(r.residuals.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-9)));
    let mask = t.rep.interior_mask(2);
    let x = t.real.as_ref().unwrap().conjugate_op(t.rep.generator(0)).commutator(t.rep.generator(1));
    assert!(x.frobenius_masked(&mask) > NONTRIVIAL_FLOOR);
}

#[test]
fn missing_real_structure_is_an_error() {
    let t = SpectralTriple::build(TripleKind::Cp, spin(4), Q).unwrap();
    assert!(check_commutant(&t, &NCPoly::generator(0), &NCPoly::generator(0), "x").is_err());
    assert!(real_structure_suite(&t).is_err());
    assert!(grading_suite(&t).is_err());
}

#[test]
fn equivariance_of_all_families() {
    for (kind, c) in [
        (TripleKind::dlssv_default(), spin(8)),
        (TripleKind::ds_standard_default(), spin(9)),
        (TripleKind::DlpsEquatorial, spin(9)),
        (TripleKind::CpShift, Cutoff::Shift { ni: 10, nj: 10 }),
        (TripleKind::CpGeneric { c: 0.7 }, Cutoff::Count(10)),
    ] {
        let t = SpectralTriple::build(kind, c, Q).unwrap();
        for r in check_equivariance(&t).unwrap() {
            assert!(r.passed() && !r.check_id.ends_with("broken"), "{r:?}");
        }
    }
}

#[test]
fn cp_breaks_exactly_one_copy() {
    let t = SpectralTriple::build(TripleKind::Cp, spin(12), Q).unwrap();
    let res = check_equivariance(&t).unwrap();
    let left = res.iter().find(|r| r.check_id == "equivariance.left.broken").unwrap();
    let right = res.iter().find(|r| r.check_id == "equivariance.right").unwrap();
    assert!(left.passed() && left.residuals[1] >= BROKEN_FLOOR);
    assert!(right.passed() && right.residuals[1] < 1e-10);
}

#[test]
fn boundedness_dichotomy() {
    let ls: Vec<Cutoff> = (4..=7).map(|l| spin(2 * l)).collect();
    let alpha = NCPoly::generator(0);
    let d = check_commutator_bounded(TripleKind::dlssv_default(), &alpha, "alpha", &ls, Q).unwrap();
    assert!(d.passed(), "{d:?}");
    let b = check_commutator_bounded(TripleKind::Bk, &alpha, "alpha", &ls, Q).unwrap();
    assert!(b.passed(), "{b:?}");
    assert!(b.residuals[3] > 50.0 * b.residuals[0]);
    let g = check_commutator_bounded(TripleKind::GoswamiAbs, &alpha, "alpha", &ls, Q).unwrap();
    assert!(g.residuals.iter().all(|x| *x < 1.0));
}

#[test]
fn unit_commutator_vanishes() {
    let t = SpectralTriple::build(TripleKind::Bk, spin(6), Q).unwrap();
    assert_eq!(commutator_norm(&t, &NCPoly::one()), 0.0);
}

#[test]
fn block_formula_for_standard_commutators() {
    let t = SpectralTriple::build(TripleKind::ds_standard_default(), spin(9), Q).unwrap();
    let r = check_dh_formula(&t).unwrap();
    assert!(r.passed(), "{r:?}");
    let z = SpectralTriple::build(TripleKind::DsStandard { z_re: 0.0, z_im: 1.0 }, spin(9), Q).unwrap();
    assert!(check_dh_formula(&z).is_err());
}

#[test]
fn real_structure_and_grading_suites() {
    for kind in [TripleKind::dlssv_default(), TripleKind::ds_standard_default(), TripleKind::DlpsEquatorial] {
        let t = SpectralTriple::build_default(kind, Q).unwrap();
        let rs = real_structure_suite(&t).unwrap();
        assert_eq!(rs.len(), if kind.is_even() { 4 } else { 3 });
        assert!(rs.iter().all(|r| r.passed()), "{rs:?}");
    }
    for kind in [TripleKind::ds_standard_default(), TripleKind::DlpsEquatorial, TripleKind::CpGeneric { c: 2.0 }] {
        let t = SpectralTriple::build_default(kind, Q).unwrap();
        assert!(grading_suite(&t).unwrap().iter().all(|r| r.passed()));
    }
}

#[test]
fn relations_on_default_truncations() {
    let r = check_relations(&Representation::left_regular(HalfInt::from_int(6), Q).unwrap(), "cp");
    assert!(r.passed() && r.residuals.len() == 7, "{r:?}");
}
