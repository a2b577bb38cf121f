use ncalg::{
    act_right_graded, check_projector, embed_podles, exact_preset, float_preset, graded_degree, grading_shift_holds,
    parse_poly, AlgebraId, ExactPoly, Grade, HopfSymbol, NcError,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use qcore::HalfInt;

fn zero_c() -> BigRational {
    BigRational::from_integer(BigInt::from(0))
}

fn presets() -> (ncalg::ExactPreset, ncalg::ExactPreset) {
    (exact_preset(AlgebraId::SUq2, zero_c()), exact_preset(AlgebraId::PodlesStandard, zero_c()))
}

#[test]
fn a_maps_to_beta_betastar() {
    let (su, pod) = presets();
    let a = parse_poly(&pod, "a").unwrap();
    assert_eq!(embed_podles(&su, &pod, &a).unwrap(), ExactPoly::word(&[1, 3]));
}

#[test]
fn a_is_selfadjoint() {
    let (su, pod) = presets();
    let a = parse_poly(&pod, "a").unwrap();
    let diff = pod.star(&a) - a;
    assert!(embed_podles(&su, &pod, &diff).unwrap().is_zero());
}

#[test]
fn sphere_relations_vanish_in_suq2() {
    let (su, pod) = presets();
    // relations as raw words, before any sphere rewriting
    for r in pod.relations() {
        assert!(embed_podles(&su, &pod, &r).unwrap().is_zero());
    }
    let mut r = ExactPoly::word(&[1, 2]);
    let qm2 = pod.q_pow(HalfInt::from_int(-2));
    r = r - ExactPoly::monomial(vec![0], qm2.clone()) + ExactPoly::monomial(vec![0, 0], qm2);
    assert!(embed_podles(&su, &pod, &r).unwrap().is_zero());
}

#[test]
fn embedding_is_multiplicative() {
    let (su, pod) = presets();
    for x in ["a*b", "bstar*a^2", "b*bstar - a", "q*b^2*bstar"] {
        for y in ["b", "a + bstar", "a*a*b"] {
            let px = parse_poly(&pod, x).unwrap();
            let py = parse_poly(&pod, y).unwrap();
            let lhs = embed_podles(&su, &pod, &pod.mul(&px, &py)).unwrap();
            let rhs = su.mul(&embed_podles(&su, &pod, &px).unwrap(), &embed_podles(&su, &pod, &py).unwrap());
            assert_eq!(lhs, rhs, "{x} * {y}");
        }
    }
}

#[test]
fn projector_identities_hold_exactly() {
    let (su, pod) = presets();
    let r = check_projector(&su, &pod).unwrap();
    assert_eq!(r.idempotent.len(), 8);
    assert!(r.all_zero());
}

#[test]
fn projector_in_floats() {
    let su = float_preset(AlgebraId::SUq2, 0.3, 0.0);
    let pod = float_preset(AlgebraId::PodlesStandard, 0.3, 0.0);
    assert!(check_projector(&su, &pod).unwrap().max_residual() < 1e-14);
}

#[test]
fn first_projector_entry() {
    let (su, _) = presets();
    let e = parse_poly(&su, "alpha*alphastar").unwrap();
    assert_eq!(e, parse_poly(&su, "1 - q^2*beta*betastar").unwrap());
}

#[test]
fn grades_under_right_k() {
    let (su, _) = presets();
    let g = |s: &str| graded_degree(&su, &parse_poly(&su, s).unwrap()).unwrap();
    assert_eq!(g("alpha"), Grade::Pure(-HalfInt::HALF));
    assert_eq!(g("betastar*beta"), Grade::Pure(HalfInt::ZERO));
    assert_eq!(g("alpha + betastar"), Grade::Mixed);
    assert_eq!(g("0"), Grade::Zero);
    for s in ["alpha", "beta*beta", "alphastar*betastar", "beta*betastar", "alpha*beta*alphastar"] {
        assert!(grading_shift_holds(&su, &parse_poly(&su, s).unwrap()).unwrap(), "{s}");
    }
}

#[test]
fn right_action_on_sphere_lands_in_grade_one() {
    let (su, pod) = presets();
    for s in ["a", "b", "bstar", "a*b"] {
        let p = parse_poly(&pod, s).unwrap();
        let (y, g) = act_right_graded(&su, &pod, &[HopfSymbol::E], &p).unwrap();
        assert!(!y.is_zero());
        assert_eq!(g, Grade::Pure(HalfInt::ONE), "{s}");
        let (_, g) = act_right_graded(&su, &pod, &[HopfSymbol::F], &p).unwrap();
        assert_eq!(g, Grade::Pure(-HalfInt::ONE), "{s}");
        let (y, _) = act_right_graded(&su, &pod, &[HopfSymbol::K], &p).unwrap();
        assert_eq!(y, embed_podles(&su, &pod, &p).unwrap());
    }
}

#[test]
fn parser_accepts_the_documented_forms() {
    let (su, pod) = presets();
    let p = parse_poly(&su, "q^(1/2)*alpha - q^{-3/2} * beta^2 + 3/4 + 0.25").unwrap();
    assert_eq!(p.len(), 3);
    let x = parse_poly(&pod, "-(a + b)^2 / 2").unwrap();
    let y = parse_poly(&pod, "-(a*a + a*b + b*a + b*b)/2").unwrap();
    assert_eq!(x, y);
}

#[test]
fn parser_reports_errors() {
    let (su, pod) = presets();
    for bad in ["alpha +", "gamma", "alpha^-1", "q^(1/3)", "(beta", "beta )"] {
        assert!(matches!(parse_poly(&su, bad), Err(NcError::Parse { .. })), "{bad}");
    }
    assert!(parse_poly(&pod, "alpha").is_err());
}
