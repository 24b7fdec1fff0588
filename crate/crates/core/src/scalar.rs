//! Scalar abstraction shared by the floating-point modules.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the q-exponential and quadrature code is generic over.
///
/// Implemented for `f32` and `f64`. Verification tolerances in this crate are
/// pinned for `f64`; `f32` is usable for evaluation but will not meet them.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal. Panics only if the target cannot hold finite values,
    /// which does not happen for the IEEE types.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// `ln(1 + t^2)` without overflow for huge `|t|` and without cancellation for small `|t|`.
#[inline]
pub(crate) fn ln_one_plus_sq<F: Real>(t: F) -> F {
    let a = t.abs();
    if a < F::lit(1e150) {
        (a * a).ln_1p()
    } else {
        F::lit(2.0) * a.ln() + (a * a).recip().ln_1p()
    }
}
