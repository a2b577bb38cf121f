use crate::{q_number_half, q_number_numerator_exact, ExactLaurent, HalfInt, QError, Scalar};

/// The pair `(C_{jμ}, S_{jμ})` coupling `V_{j-1/2} ⊗ V_{1/2}` down to spin `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingPair<T> {
    pub c: T,
    pub s: T,
}

fn check_domain(j: HalfInt, mu: HalfInt) -> Result<(), QError> {
    let ok = j >= HalfInt::HALF && mu.abs() <= j && (j - mu).is_integer();
    if ok {
        Ok(())
    } else {
        Err(QError::Domain { j: j.to_string(), mu: mu.to_string() })
    }
}

/// `C_{jμ} = q^{-(j+μ)/2} [j-μ]^{1/2} [2j]^{-1/2}`,
/// `S_{jμ} = q^{(j-μ)/2} [j+μ]^{1/2} [2j]^{-1/2}`.
///
/// `q` may be any positive number here so that the inverted coupling can
/// reuse it with `1/q`.
pub fn cs_pair<T: Scalar>(j: HalfInt, mu: HalfInt, q: T) -> Result<CouplingPair<T>, QError> {
    check_domain(j, mu)?;
    let half = T::lit(0.5);
    let den = q_number_half(j + j, q);
    let c = q.powf(-T::lit((j + mu).to_f64()) * half) * (q_number_half(j - mu, q) / den).sqrt();
    let s = q.powf(T::lit((j - mu).to_f64()) * half) * (q_number_half(j + mu, q) / den).sqrt();
    Ok(CouplingPair { c, s })
}

/// Exact form of the squared coefficients: `C² = num_c / den`, `S² = num_s / den`
/// with all three Laurent polynomials in `t = q^{1/2}`. The common factor
/// `q - q^{-1}` of the q-numbers cancels and is dropped.
pub fn cs_pair_squared_exact(
    j: HalfInt,
    mu: HalfInt,
) -> Result<(ExactLaurent, ExactLaurent, ExactLaurent), QError> {
    check_domain(j, mu)?;
    let num_c = ExactLaurent::q_pow(-(j + mu)) * q_number_numerator_exact(j - mu);
    let num_s = ExactLaurent::q_pow(j - mu) * q_number_numerator_exact(j + mu);
    let den = q_number_numerator_exact(j + j);
    Ok((num_c, num_s, den))
}

/// Orthogonal change of basis inside `V_{j-1/2} ⊗ C²` at coupled weight `μ`.
///
/// Rows are `(|j-1, μ, up>, |j, μ, down>)`, columns are
/// `(|j-1/2, μ+1/2> ⊗ e_-, |j-1/2, μ-1/2> ⊗ e_+)`. With `inverted` the
/// coefficients are evaluated at `1/q`, which is the coupling for the
/// opposite tensor order `C² ⊗ V`.
pub fn spin_half_coupling<T: Scalar>(
    j: HalfInt,
    mu: HalfInt,
    q: T,
    inverted: bool,
) -> Result<[[T; 2]; 2], QError> {
    let qq = if inverted { q.recip() } else { q };
    let CouplingPair { c, s } = cs_pair(j, mu, qq)?;
    Ok([[-s, c], [c, s]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_values() {
        let j = HalfInt::from_twice(5);
        let p = cs_pair(j, j, 0.5f64).unwrap();
        assert!(p.c.abs() < 1e-15 && (p.s - 1.0).abs() < 1e-15);
        let p = cs_pair(j, -j, 0.5f64).unwrap();
        assert!((p.c - 1.0).abs() < 1e-15 && p.s.abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(cs_pair(HalfInt::ZERO, HalfInt::ZERO, 0.5f64).is_err());
        assert!(cs_pair(HalfInt::ONE, HalfInt::from_twice(4), 0.5f64).is_err());
        assert!(cs_pair(HalfInt::ONE, HalfInt::HALF, 0.5f64).is_err());
    }

    #[test]
    fn block_is_orthogonal_with_det_minus_one() {
        let b = spin_half_coupling(HalfInt::from_twice(3), HalfInt::HALF, 0.5f64, false).unwrap();
        let det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
        assert!((det + 1.0).abs() < 1e-14);
    }
}
