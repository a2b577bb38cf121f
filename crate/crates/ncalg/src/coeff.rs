use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use qcore::{ExactLaurent, HalfInt, Scalar};

/// Coefficient ring of the polynomial algebras: exact Laurent polynomials in
/// `q^{1/2}` or floating values at a fixed `q`.
pub trait Coeff:
    Clone + PartialEq + Debug + Send + Sync + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// Data needed to turn `q` and the sphere parameter `c` into coefficients.
    type Ctx: Clone + Debug + Send + Sync;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn q_pow(ctx: &Self::Ctx, x: HalfInt) -> Self;
    /// The generic-sphere parameter `c`.
    fn sphere_param(ctx: &Self::Ctx) -> Self;
    /// Largest absolute value among the coefficient's numbers, for residuals.
    fn magnitude(&self) -> f64;
    /// Value at the numeric `q` carried by `ctx_q`.
    fn to_f64_at(&self, q: f64) -> f64;
}

/// Context of the exact mode: `q` stays symbolic, `c` is rational.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactCtx {
    pub c: BigRational,
}

impl Default for ExactCtx {
    fn default() -> Self {
        ExactCtx { c: BigRational::zero() }
    }
}

/// Context of the floating mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatCtx<T> {
    pub q: T,
    pub c: T,
}

impl<T: Scalar> FloatCtx<T> {
    pub fn new(q: T) -> Self {
        FloatCtx { q, c: T::zero() }
    }

    pub fn with_c(q: T, c: T) -> Self {
        FloatCtx { q, c }
    }
}

impl Coeff for ExactLaurent {
    type Ctx = ExactCtx;

    fn zero() -> Self {
        ExactLaurent::zero()
    }
    fn one() -> Self {
        ExactLaurent::one()
    }
    fn is_zero(&self) -> bool {
        ExactLaurent::is_zero(self)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        ExactLaurent::constant(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
    fn q_pow(_: &ExactCtx, x: HalfInt) -> Self {
        ExactLaurent::q_pow(x)
    }
    fn sphere_param(ctx: &ExactCtx) -> Self {
        ExactLaurent::constant(ctx.c.clone())
    }
    fn magnitude(&self) -> f64 {
        self.terms().map(|(_, c)| c.abs().to_f64().unwrap_or(f64::INFINITY)).fold(0.0, f64::max)
    }
    fn to_f64_at(&self, q: f64) -> f64 {
        self.eval_q(q)
    }
}

macro_rules! float_coeff {
    ($t:ty) => {
        impl Coeff for $t {
            type Ctx = FloatCtx<$t>;

            fn zero() -> Self {
                0.0
            }
            fn one() -> Self {
                1.0
            }
            fn is_zero(&self) -> bool {
                *self == 0.0
            }
            fn from_ratio(num: i64, den: i64) -> Self {
                num as $t / den as $t
            }
            fn q_pow(ctx: &FloatCtx<$t>, x: HalfInt) -> Self {
                ctx.q.powf(x.to_f64() as $t)
            }
            fn sphere_param(ctx: &FloatCtx<$t>) -> Self {
                ctx.c
            }
            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }
            fn to_f64_at(&self, _q: f64) -> f64 {
                *self as f64
            }
        }
    };
}

float_coeff!(f32);
float_coeff!(f64);
