use crate::{ExactLaurent, HalfInt, QError, Scalar};

/// Deformation parameter, validated to lie in (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QParam<T> {
    q: T,
}

impl<T: Scalar> QParam<T> {
    pub fn new(q: T) -> Result<Self, QError> {
        if q > T::zero() && q < T::one() {
            Ok(QParam { q })
        } else {
            Err(QError::QOutOfRange(q.as_f64()))
        }
    }

    pub fn value(self) -> T {
        self.q
    }

    /// `q^x` for a half-integer exponent.
    pub fn pow(self, x: HalfInt) -> T {
        self.q.powf(T::lit(x.to_f64()))
    }

    pub fn number(self, x: T) -> T {
        q_number(x, self.q)
    }

    pub fn number_half(self, x: HalfInt) -> T {
        q_number_half(x, self.q)
    }
}

/// `[x]_q = (q^x - q^{-x}) / (q - q^{-1})`.
///
/// Defined for every positive `q`; at `q = 1` the limit `x` is returned.
/// Symmetric under `q -> 1/q`.
pub fn q_number<T: Scalar>(x: T, q: T) -> T {
    if q == T::one() {
        return x;
    }
    (q.powf(x) - q.powf(-x)) / (q - q.recip())
}

pub fn q_number_half<T: Scalar>(x: HalfInt, q: T) -> T {
    q_number(T::lit(x.to_f64()), q)
}

/// `(q - q^{-1}) [x]_q = q^x - q^{-x}` as an exact Laurent polynomial.
pub fn q_number_numerator_exact(x: HalfInt) -> ExactLaurent {
    ExactLaurent::q_pow(x) - ExactLaurent::q_pow(-x)
}
