use num_complex::Complex64;
use num_rational::Rational64;
use qcore::HalfInt;
use reps::Cutoff;
use triples::{SpectralTriple, TripleKind};
use verify::Verdict;
use zeta::*;

const Q: f64 = 0.5;

fn r(n: i64) -> Rational64 {
    Rational64::from(n)
}

// direct sum of 4k / [k]_q with [k]_q as the geometric sum q^{k-1} + ... + q^{1-k}
fn direct_trace(q: f64, k_max: usize) -> f64 {
    (1..=k_max as i32).map(|k| 4.0 * k as f64 / (0..k).map(|i| q.powi(k - 1 - 2 * i)).sum::<f64>()).sum()
}

#[test]
fn standard_sphere_example_levels() {
    let t = SpectralTriple::build(TripleKind::ds_standard_default(), Cutoff::Spin(HalfInt::from_twice(7)), Q).unwrap();
    let s = AbsSpectrum::of(&t);
    let got: Vec<_> = s.entries.iter().map(|e| (e.eigenvalue, e.multiplicity)).collect();
    let want = [(1.0, 4), (2.5, 8), (5.25, 12), (10.625, 16)];
    assert_eq!(got.len(), 4);
    for (g, w) in got.iter().zip(want) {
        assert!((g.0 - w.0).abs() < 1e-12 && g.1 == w.1, "{g:?} vs {w:?}");
    }
    assert_eq!(s.dimension(), t.dim());
}

#[test]
fn trace_of_inverse_modulus() {
    let t = SpectralTriple::build_default(TripleKind::ds_standard_default(), Q).unwrap();
    let (rows, checks) = summability_report(&t, &[1.0]).unwrap();
    let row = rows[0];
    let (lo, hi) = row.trace_interval();
    assert!(hi - lo < 1e-3);
    let oracle = direct_trace(Q, 200);
    assert!(lo <= oracle + 1e-12 && oracle <= hi + 1e-12, "{lo} {oracle} {hi}");
    assert!((row.trace() - 13.24).abs() < 0.01);
    assert!(row.trace() <= 16.0 && (row.corrected_bound - 16.0).abs() < 1e-12);
    assert!((row.printed_bound - 12.0).abs() < 1e-12);
    assert_eq!(row.verdict, Verdict::Flagged);
    for c in &checks {
        let want = if c.check_id.starts_with("summability.printed-bound") { Verdict::Flagged } else { Verdict::Pass };
        assert_eq!(c.verdict, want, "{}", c.check_id);
    }
}

#[test]
fn tail_formula_matches_summation() {
    for (rr, k) in [(0.5f64, 3usize), (0.25, 10), (0.9, 40)] {
        let direct: f64 = (k + 1..5000).map(|n| 4.0 * n as f64 * rr.powi(n as i32 - 1)).sum();
        assert!((geometric_tail(rr, k) - direct).abs() < 1e-9 * direct.max(1e-30), "{rr} {k}");
    }
}

#[test]
fn summability_refuses_polynomial_spectra() {
    let t = SpectralTriple::build(TripleKind::DlpsEquatorial, Cutoff::Spin(HalfInt::from_twice(5)), Q).unwrap();
    assert!(matches!(summability_report(&t, &[1.0]), Err(ZetaError::NotExponential(_))));
}

#[test]
fn pole_sets() {
    let cases = [
        (TripleKind::Cp, Cutoff::Spin(HalfInt::from_int(6)), vec![r(1), r(2), r(3)]),
        (TripleKind::DlpsEquatorial, Cutoff::Spin(HalfInt::from_twice(13)), vec![r(2)]),
        (TripleKind::dlssv_default(), Cutoff::Spin(HalfInt::from_int(6)), vec![r(3)]),
        (TripleKind::CpShift, Cutoff::Shift { ni: 12, nj: 12 }, vec![r(1), r(2)]),
        (TripleKind::CpGeneric { c: 0.3 }, Cutoff::Count(15), vec![r(1)]),
    ];
    for (kind, cut, want) in cases {
        let law = multiplicity_law(&kind, cut).unwrap();
        let t = SpectralTriple::build(kind, cut, Q).unwrap();
        validate_law(&law, &AbsSpectrum::of(&t)).unwrap_or_else(|e| panic!("{}: {e}", kind.slug()));
        assert_eq!(pole_set(&law).unwrap(), want, "{}", kind.slug());
    }
}

#[test]
fn shifted_dlssv_keeps_subleading_pole() {
    // c2 = 1: up 2j+1, down -2j+1; the linear terms no longer cancel
    let kind = TripleKind::dlssv_constrained(2.0, 1.0);
    let law = multiplicity_law(&kind, Cutoff::Spin(HalfInt::from_int(5))).unwrap();
    let t = SpectralTriple::build(kind, Cutoff::Spin(HalfInt::from_int(5)), Q).unwrap();
    validate_law(&law, &AbsSpectrum::of(&t)).unwrap();
    assert_eq!(*pole_set(&law).unwrap().last().unwrap(), r(3));
}

#[test]
fn wrong_law_is_rejected() {
    let t = SpectralTriple::build(TripleKind::Cp, Cutoff::Spin(HalfInt::from_int(4)), Q).unwrap();
    let law = multiplicity_law(&TripleKind::DlpsEquatorial, Cutoff::Spin(HalfInt::from_twice(7))).unwrap();
    assert!(validate_law(&law, &AbsSpectrum::of(&t)).is_err());
    assert!(matches!(pole_set(&MultiplicityLaw::Exponential { base: 2.0 }), Err(ZetaError::NotPolynomial)));
}

#[test]
fn growth_exponents_locate_the_leading_pole() {
    // shift family: mult 2m+1 at m, so Σ_{m ≤ Λ} (2m+1) m^{-z} ~ Λ^{2-z}
    let t = SpectralTriple::build(TripleKind::CpShift, Cutoff::Shift { ni: 200, nj: 200 }, Q).unwrap();
    let law = multiplicity_law(&t.kind, t.rep.basis.cutoff).unwrap();
    let spec = AbsSpectrum::from_entries(&law_entries(&law).unwrap());
    let g = growth_exponent(&spec, 1.5).unwrap();
    assert!((g - 0.5).abs() < 0.5 * 0.15, "{g}");
    assert!(growth_exponent(&spec, 2.5).unwrap() < 0.0);

    // CP: Σ (n+1)² (n/2)^{-z}; convergent at z = 4, Cauchy in Λ
    let t = SpectralTriple::build(TripleKind::Cp, Cutoff::Spin(HalfInt::from_int(8)), Q).unwrap();
    let sums = cumulative_sums(&AbsSpectrum::of(&t), 4.0);
    let n = sums.len();
    let (a, b) = (sums[n / 2].1, sums[n - 1].1);
    assert!((b - a) / b < 0.05, "{a} {b}");
}

#[test]
fn zeta_partial_matches_direct_sum() {
    let t = SpectralTriple::build(TripleKind::DlpsEquatorial, Cutoff::Spin(HalfInt::from_twice(9)), Q).unwrap();
    let z = Complex64::new(2.5, 1.0);
    let direct: Complex64 = (1..=5).map(|k| 4.0 * k as f64 * Complex64::new(k as f64, 0.0).powc(-z)).sum();
    assert!((zeta_partial(&AbsSpectrum::of(&t), z) - direct).norm() < 1e-12);
    let grid = zeta_grid(&AbsSpectrum::of(&t), &[2.5, 3.0], &[0.0, 1.0]);
    assert_eq!(grid.len(), 4);
    assert!((grid[1].1 - direct).norm() < 1e-12);
}

#[test]
fn multiplicities_account_for_the_whole_space() {
    for kind in [TripleKind::Cp, TripleKind::dlssv_default(), TripleKind::DlpsEquatorial, TripleKind::ds_standard_default()] {
        let t = SpectralTriple::build(kind, Cutoff::Spin(HalfInt::from_twice(7)), Q).unwrap();
        assert_eq!(AbsSpectrum::of(&t).dimension(), t.dim(), "{}", kind.slug());
    }
}

#[test]
fn csv_output_is_stable() {
    let t = SpectralTriple::build(TripleKind::DlpsEquatorial, Cutoff::Spin(HalfInt::from_twice(3)), Q).unwrap();
    let spec = AbsSpectrum::of(&t);
    let mut a = Vec::new();
    write_spectrum_csv(&mut a, &spec.entries).unwrap();
    let mut b = Vec::new();
    write_spectrum_csv(&mut b, &spec.entries).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().next(), Some("eigenvalue,multiplicity"));
    assert_eq!(text.lines().nth(1), Some("1.0000000000000000e0,4"));
}
