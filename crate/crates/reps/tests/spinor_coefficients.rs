//! Cross-check of the spinorial representation against the printed
//! triangular 2×2 coefficient matrices. There the generator `a` raises both
//! `μ` and `n`, which in our conventions is `α*`.

use qcore::HalfInt;
use reps::{BasisLabel, Representation};

const Q: f64 = 0.5;

fn qn(x: f64) -> f64 {
    (Q.powf(x) - Q.powf(-x)) / (Q - 1.0 / Q)
}

fn rt(x: f64) -> f64 {
    qn(x).max(0.0).sqrt()
}

/// Printed `α^±_{jμn}`, rows and columns ordered (↑, ↓).
fn printed_alpha(j: f64, mu: f64, n: f64, plus: bool) -> [[f64; 2]; 2] {
    let pre = Q.powf((0.5 - mu - n) / 2.0);
    if plus {
        let p = pre * rt(j + mu + 1.0);
        [
            [p * Q.powf(j + 0.5) * rt(j + n + 1.5) / qn(2.0 * j + 2.0), 0.0],
            [p * Q.powf(-0.5) * rt(j - n + 0.5) / (qn(2.0 * j + 1.0) * qn(2.0 * j + 2.0)), p * Q.powf(j) * rt(j + n + 0.5) / qn(2.0 * j + 1.0)],
        ]
    } else {
        let p = pre * rt(j - mu);
        let guard = |v: f64| if j > 0.0 { v } else { 0.0 };
        [
            [p * Q.powf(-j - 1.0) * rt(j - n + 0.5) / qn(2.0 * j + 1.0), guard(-p * Q.powf(-0.5) * rt(j + n + 0.5) / (qn(2.0 * j) * qn(2.0 * j + 1.0)))],
            [0.0, guard(p * Q.powf(-j - 0.5) * rt(j - n - 0.5) / qn(2.0 * j))],
        ]
    }
}

/// `<target, x| X |source, y>` for x, y ∈ {↑, ↓}.
fn block(rep: &Representation<f64>, g: u8, src: (HalfInt, HalfInt, HalfInt), tgt: (HalfInt, HalfInt, HalfInt)) -> [[f64; 2]; 2] {
    let mut out = [[0.0; 2]; 2];
    for (a, ua) in [true, false].into_iter().enumerate() {
        for (b, ub) in [true, false].into_iter().enumerate() {
            let s = BasisLabel::Spinor { j: src.0, up: ub, mu: src.1, n: src.2 };
            let t = BasisLabel::Spinor { j: tgt.0, up: ua, mu: tgt.1, n: tgt.2 };
            if let (Some(_), Some(_)) = (rep.basis.index_of(&s), rep.basis.index_of(&t)) {
                let v = rep.generator(g).get_labels(&t, &s);
                assert!(v.im.abs() < 1e-15);
                out[a][b] = v.re;
            }
        }
    }
    out
}

fn points(max_twice_j: i32) -> impl Iterator<Item = (HalfInt, HalfInt, HalfInt)> {
    (0..=max_twice_j).flat_map(|tj| {
        let j = HalfInt::from_twice(tj);
        j.projections().flat_map(move |mu| (j + HalfInt::HALF).projections().map(move |n| (j, mu, n)))
    })
}

#[test]
fn alpha_blocks_agree_up_to_integer_powers_of_q() {
    let rep = Representation::spinorial(HalfInt::from_twice(12), Q).unwrap();
    let h = HalfInt::HALF;
    let mut compared = 0;
    for (j, mu, n) in points(4) {
        for plus in [true, false] {
            if !plus && j == HalfInt::ZERO {
                continue;
            }
            let tj = if plus { j + h } else { j - h };
            let ours = block(&rep, 2, (j, mu, n), (tj, mu + h, n + h));
            let printed = printed_alpha(j.to_f64(), mu.to_f64(), n.to_f64(), plus);
            for a in 0..2 {
                for b in 0..2 {
                    let (x, y) = (ours[a][b], printed[a][b]);
                    if x.abs() > 1e-14 {
                        assert!(y.abs() > 1e-14, "entry ({a},{b}) at ({j},{mu},{n},{plus}) is outside the printed triangle");
                        let k = (x / y).ln() / Q.ln();
                        assert!(x / y > 0.0 && (k - k.round()).abs() < 1e-9, "ratio {} at ({j},{mu},{n},{plus})", x / y);
                        compared += 1;
                    }
                }
            }
        }
    }
    assert!(compared > 100);
}

#[test]
fn upper_left_entry_of_alpha_minus() {
    let rep = Representation::spinorial(HalfInt::from_twice(8), Q).unwrap();
    let h = HalfInt::HALF;
    let (j, mu, n) = (h, -h, HalfInt::ZERO);
    let ours = block(&rep, 2, (j, mu, n), (j - h, mu + h, n + h))[0][0];
    let printed = printed_alpha(0.5, -0.5, 0.0, false)[0][0];
    // q^{-j-1}[j-n+½]^{½}/[2j+1] times the prefactor, at q = ½: 0.8
    assert!((printed - 0.8).abs() < 1e-14);
    assert!((ours / printed - Q * Q).abs() < 1e-14, "{ours} vs {printed}");
}

#[test]
fn tilde_blocks_are_hermitian_conjugates() {
    let rep = Representation::spinorial(HalfInt::from_twice(12), Q).unwrap();
    let h = HalfInt::HALF;
    for (j, mu, n) in points(6) {
        for plus in [true, false] {
            let tj = if plus { j + h } else { j - h };
            if tj < HalfInt::ZERO {
                continue;
            }
            // α ⟶ (j±, μ-, n-) against α* ⟶ back
            let down = block(&rep, 0, (j, mu, n), (tj, mu - h, n - h));
            let up = block(&rep, 2, (tj, mu - h, n - h), (j, mu, n));
            for a in 0..2 {
                for b in 0..2 {
                    assert!((down[a][b] - up[b][a]).abs() < 1e-15);
                }
            }
        }
    }
}
