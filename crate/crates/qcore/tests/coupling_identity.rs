use proptest::prelude::*;
use qcore::{cs_pair, cs_pair_squared_exact, spin_half_coupling, HalfInt};

fn q_number(x: f64, q: f64) -> f64 {
    qcore::q_number(x, q)
}

// Independent oracle: q-numbers as the finite sum q^{x-1} + q^{x-3} + ... + q^{1-x}
// for integer and half-integer x > 0 reached in integer steps from 0 or 1/2.
fn q_number_series(x2: i32, q: f64) -> f64 {
    // valid when x2 = 2x is a positive integer and x is an integer
    assert!(x2 % 2 == 0 && x2 >= 0);
    let x = x2 / 2;
    (0..x).map(|k| q.powi(x - 1 - 2 * k)).sum()
}

#[test]
fn q_number_agrees_with_series() {
    for x in 0..15 {
        let a = q_number(x as f64, 0.5);
        let b = q_number_series(2 * x, 0.5);
        assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0), "x={x}");
    }
}

#[test]
fn q_numbers_strictly_increase() {
    for q in [0.1, 0.5, 0.9] {
        let mut prev = q_number(0.0, q);
        for n in 1..40 {
            let v = q_number(n as f64, q);
            assert!(v > prev && v > 0.0);
            prev = v;
        }
    }
}

#[test]
fn classical_limit() {
    for x in 0..=10 {
        assert!((q_number(x as f64, 0.999) - x as f64).abs() < 1e-2);
    }
}

#[test]
fn coupling_identity_exact_up_to_25() {
    for twice_j in 1..=50 {
        let j = HalfInt::from_twice(twice_j);
        for mu in j.projections() {
            let (nc, ns, den) = cs_pair_squared_exact(j, mu).unwrap();
            assert!((nc + ns - den).is_zero(), "j={j} mu={mu}");
        }
    }
}

#[test]
fn coupling_identity_float_up_to_25() {
    let mut worst = 0.0f64;
    for twice_j in 1..=50 {
        let j = HalfInt::from_twice(twice_j);
        for mu in j.projections() {
            let p = cs_pair(j, mu, 0.5f64).unwrap();
            worst = worst.max((p.c * p.c + p.s * p.s - 1.0).abs());
        }
    }
    assert!(worst < 1e-13, "worst {worst}");
}

#[test]
fn j_one_mu_zero_direct() {
    // C² + S² with [1]=1, [2]=q+1/q, q=0.5: (q^{-1} + q) / [2] = 1
    let p = cs_pair(HalfInt::ONE, HalfInt::ZERO, 0.5f64).unwrap();
    let c2 = 2.0 * 1.0 / 2.5;
    let s2 = 0.5 * 1.0 / 2.5;
    assert!((p.c * p.c - c2).abs() < 1e-15);
    assert!((p.s * p.s - s2).abs() < 1e-15);
}

#[test]
fn block_entries_follow_the_spinor_basis_formulas() {
    let j = HalfInt::from_twice(3);
    let mu = HalfInt::HALF;
    let p = cs_pair(j, mu, 0.5f64).unwrap();
    let b = spin_half_coupling(j, mu, 0.5f64, false).unwrap();
    // down row: (C, S); up row of label j-1: (-S_{j,mu}, C_{j,mu})
    assert_eq!(b[1], [p.c, p.s]);
    assert_eq!(b[0], [-p.s, p.c]);
}

#[test]
fn inverted_equals_reciprocal_q() {
    let j = HalfInt::from_twice(7);
    for mu in j.projections() {
        let a = spin_half_coupling(j, mu, 0.5f64, true).unwrap();
        let b = spin_half_coupling(j, mu, 2.0f64, false).unwrap();
        assert_eq!(a, b);
    }
}

proptest! {
    #[test]
    fn blocks_are_orthogonal(twice_j in 1i32..60, k in 0i32..60, q in 0.05f64..0.95, inv in any::<bool>()) {
        let j = HalfInt::from_twice(twice_j);
        let mu = HalfInt::from_twice(-twice_j + 2 * (k % (twice_j + 1)));
        let b = spin_half_coupling(j, mu, q, inv).unwrap();
        for r in 0..2 {
            for s in 0..2 {
                let dot = b[r][0] * b[s][0] + b[r][1] * b[s][1];
                let want = if r == s { 1.0 } else { 0.0 };
                prop_assert!((dot - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn q_number_symmetric_in_q(x in -20.0f64..20.0, q in 0.05f64..0.95) {
        let a = q_number(x, q);
        let b = q_number(x, 1.0 / q);
        prop_assert!((a - b).abs() <= 1e-10 * a.abs().max(1.0));
    }

    #[test]
    fn q_number_odd(x in -20.0f64..20.0, q in 0.05f64..0.95) {
        prop_assert!((q_number(x, q) + q_number(-x, q)).abs() <= 1e-10 * q_number(x, q).abs().max(1.0));
    }
}
