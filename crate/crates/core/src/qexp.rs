//! The q-exponential family.
//!
//! For an entropic index `q` the q-exponential is
//! `e_q(x) = [1 + (1 - q) x]_+^{1/(1-q)}` with `e_1(x) = exp(x)`. On the imaginary
//! axis the base `1 + (1 - q) i x` has real part 1, so its principal argument stays in
//! `(-π/2, π/2)` and the principal power is evaluated in polar form:
//!
//! ```text
//! |e_q(ix)|   = [1 + (q-1)^2 x^2]^{-1/(2(q-1))}
//! arg e_q(ix) = arctan((q-1) x) / (q-1)
//! ```
//!
//! `q = 1` is dispatched to `exp`/`cos`/`sin` directly. Values of `q` arbitrarily close
//! to 1 go through the general formula; expect a relative precision loss of order
//! `ε / (q - 1)` there.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{ln_one_plus_sq, Real};

/// Which interval the entropic index is validated against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QContext {
    /// `1 <= q < 2`, where the q-plane waves represent the Dirac delta.
    Delta,
    /// `1 < q < 3`, where q-plane waves are square integrable.
    Wave,
}

impl QContext {
    pub fn range_label(&self) -> &'static str {
        match self {
            QContext::Delta => "[1, 2)",
            QContext::Wave => "(1, 3)",
        }
    }

    fn contains<F: Real>(&self, q: F) -> bool {
        match self {
            QContext::Delta => q >= F::one() && q < F::lit(2.0),
            QContext::Wave => q > F::one() && q < F::lit(3.0),
        }
    }
}

impl fmt::Display for QContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QContext::Delta => f.write_str("delta"),
            QContext::Wave => f.write_str("wave"),
        }
    }
}

/// A validated entropic index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QParam<F> {
    q: F,
    context: QContext,
}

impl<F: Real> QParam<F> {
    pub fn new(q: F, context: QContext) -> Result<Self> {
        if !context.contains(q) {
            return Err(Error::QOutOfDomain { q: q.as_f64(), context });
        }
        Ok(Self { q, context })
    }

    pub fn delta(q: F) -> Result<Self> {
        Self::new(q, QContext::Delta)
    }

    pub fn wave(q: F) -> Result<Self> {
        Self::new(q, QContext::Wave)
    }

    #[inline]
    pub fn value(&self) -> F {
        self.q
    }

    #[inline]
    pub fn context(&self) -> QContext {
        self.context
    }

    #[inline]
    pub fn is_unity(&self) -> bool {
        self.q == F::one()
    }
}

/// The exponent `α(q) = (2 - q) / (2 (q - 1))`, positive and decreasing on `(1, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Alpha<F>(F);

impl<F: Real> Alpha<F> {
    pub fn new(alpha: F) -> Result<Self> {
        if !(alpha > F::zero() && alpha.is_finite()) {
            return Err(Error::NotPositive { what: "alpha", value: alpha.as_f64() });
        }
        Ok(Self(alpha))
    }

    #[inline]
    pub fn value(&self) -> F {
        self.0
    }

    /// `n = 2α`, when it is (numerically) a positive integer.
    pub fn as_index(&self) -> Option<u64> {
        let n = F::lit(2.0) * self.0;
        let rounded = n.round();
        let slack = F::lit(4.0) * F::epsilon() * n * n.max(F::one());
        if rounded >= F::one() && (n - rounded).abs() <= slack {
            rounded.to_u64()
        } else {
            None
        }
    }

    /// Inverse map `q = (1 + α) / (1/2 + α)`, i.e. `(n + 2) / (n + 1)` with `n = 2α`.
    pub fn to_q(&self) -> F {
        let n = F::lit(2.0) * self.0;
        (n + F::lit(2.0)) / (n + F::one())
    }
}

pub fn alpha_of_q<F: Real>(q: QParam<F>) -> Result<Alpha<F>> {
    let q = q.value();
    if q <= F::one() {
        return Err(Error::AlphaAtUnity);
    }
    if q >= F::lit(2.0) {
        return Err(Error::QOutOfDomain { q: q.as_f64(), context: QContext::Delta });
    }
    Alpha::new((F::lit(2.0) - q) / (F::lit(2.0) * (q - F::one())))
}

/// The rational index `q = (n + 2) / (n + 1)`, for which `2 α(q) = n`.
pub fn q_of_n<F: Real>(n: u64) -> Result<QParam<F>> {
    if n == 0 {
        return Err(Error::NotPositive { what: "n", value: 0.0 });
    }
    let n = F::from_u64(n).ok_or(Error::NotPositive { what: "n", value: n as f64 })?;
    QParam::delta((n + F::lit(2.0)) / (n + F::one()))
}

/// A complex value `re + i im`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QComplex<F> {
    pub re: F,
    pub im: F,
}

impl<F: Real> QComplex<F> {
    pub fn new(re: F, im: F) -> Self {
        Self { re, im }
    }

    pub fn norm_sqr(&self) -> F {
        self.re * self.re + self.im * self.im
    }

    pub fn norm(&self) -> F {
        self.re.hypot(self.im)
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re, im: -self.im }
    }
}

/// Real q-exponential together with an overflow flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QExpValue<F> {
    pub value: F,
    /// Set when the true value exceeds the largest finite float; `value` is `+inf`.
    pub saturated: bool,
}

/// `[1 + (1 - q) x]_+^{1/(1-q)}`; `exp(x)` at `q = 1`.
///
/// A negative base is clamped to exactly 0. For `q > 1` the exponent is negative, so
/// the value blows up as the base approaches `0+`; a zero base saturates to `+inf`.
pub fn q_exp_real<F: Real>(q: QParam<F>, x: F) -> QExpValue<F> {
    let value = if q.is_unity() {
        x.exp()
    } else {
        let one_minus_q = F::one() - q.value();
        let base = F::one() + one_minus_q * x;
        if base < F::zero() {
            return QExpValue { value: F::zero(), saturated: false };
        }
        (base.ln() / one_minus_q).exp()
    };
    QExpValue { value, saturated: value.is_infinite() }
}

/// Modulus and argument of `e_q(ix)` for `q != 1`.
#[inline]
fn polar<F: Real>(q: F, x: F) -> (F, F) {
    let qm1 = q - F::one();
    let t = qm1 * x;
    let modulus = (-ln_one_plus_sq(t) / (F::lit(2.0) * qm1)).exp();
    let angle = t.atan() / qm1;
    (modulus, angle)
}

/// Principal value of `[1 + (1 - q) i x]^{1/(1-q)}`; `(cos x, sin x)` at `q = 1`.
pub fn q_exp_imag<F: Real>(q: QParam<F>, x: F) -> QComplex<F> {
    if q.is_unity() {
        let (s, c) = x.sin_cos();
        return QComplex::new(c, s);
    }
    let (modulus, angle) = polar(q.value(), x);
    let (s, c) = angle.sin_cos();
    QComplex::new(modulus * c, modulus * s)
}

/// `Re e_q(ix)`. Even in `x`.
pub fn q_cos<F: Real>(q: QParam<F>, x: F) -> F {
    q_exp_imag(q, x).re
}

/// `Im e_q(ix)`. Odd in `x`.
pub fn q_sin<F: Real>(q: QParam<F>, x: F) -> F {
    q_exp_imag(q, x).im
}

/// `|e_q(ix)|^2 = [1 + (q-1)^2 x^2]^{-1/(q-1)}`; identically 1 at `q = 1`.
pub fn q_modulus_sq<F: Real>(q: QParam<F>, x: F) -> F {
    if q.is_unity() {
        return F::one();
    }
    let qm1 = q.value() - F::one();
    (-ln_one_plus_sq(qm1 * x) / qm1).exp()
}

/// Parameters `(q, Λ)` of the nascent delta `Δ_q(x, Λ)`, with `1 < q < 2` and `Λ > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NascentDeltaSpec<F> {
    q: QParam<F>,
    lambda: F,
}

impl<F: Real> NascentDeltaSpec<F> {
    pub fn new(q: F, lambda: F) -> Result<Self> {
        let q = QParam::delta(q)?;
        if q.is_unity() {
            return Err(Error::AlphaAtUnity);
        }
        if !(lambda > F::zero() && lambda.is_finite()) {
            return Err(Error::NotPositive { what: "lambda", value: lambda.as_f64() });
        }
        Ok(Self { q, lambda })
    }

    pub fn q(&self) -> QParam<F> {
        self.q
    }

    pub fn lambda(&self) -> F {
        self.lambda
    }

    /// `α(q)` for these parameters; always defined since `q > 1`.
    pub fn alpha(&self) -> F {
        let q = self.q.value();
        (F::lit(2.0) - q) / (F::lit(2.0) * (q - F::one()))
    }

    /// Scale `(q - 1) Λ` of the substitution `z = (q - 1) Λ x`.
    pub fn z_scale(&self) -> F {
        (self.q.value() - F::one()) * self.lambda
    }
}

/// Below this `max(1, c) |u|` the removable singularity of `sin(c atan u) / u` is expanded.
pub const SERIES_SWITCH: f64 = 1e-4;

/// `[sin(c atan u) / (c u)] (1 + u^2)^{-α}` with `c = 2α`, normalised to 1 at `u = 0`.
#[inline]
fn kernel_profile<F: Real>(alpha: F, u: F) -> F {
    let c = F::lit(2.0) * alpha;
    let decay = (-alpha * ln_one_plus_sq(u)).exp();
    if u.abs() * c.max(F::one()) < F::lit(SERIES_SWITCH) {
        let c2 = c * c;
        let u2 = u * u;
        let a1 = F::lit(1.0 / 3.0) + c2 / F::lit(6.0);
        let a2 = F::lit(0.2) + c2 / F::lit(6.0) + c2 * c2 / F::lit(120.0);
        (F::one() - a1 * u2 + a2 * u2 * u2) * decay
    } else {
        (c * u.atan()).sin() / (c * u) * decay
    }
}

/// Unit-scale kernel `K(z) = sin(2α atan z) / (π z (1 + z^2)^α)`, integrating to 1 over ℝ.
///
/// `Δ_q(x, Λ) = s K(s x)` with `s = (q - 1) Λ` and `α = α(q)`.
pub fn nascent_kernel<F: Real>(alpha: F, z: F) -> F {
    F::lit(2.0) * alpha * F::FRAC_1_PI() * kernel_profile(alpha, z)
}

/// `Δ_q(x, Λ) = sin{((2-q)/(q-1)) atan((q-1)Λx)} / (π x [1 + (q-1)^2 Λ^2 x^2]^{(2-q)/(2(q-1))})`.
///
/// Even in `x`, with `Δ_q(0, Λ) = (2 - q) Λ / π`.
pub fn nascent_delta<F: Real>(spec: NascentDeltaSpec<F>, x: F) -> F {
    let peak = (F::lit(2.0) - spec.q.value()) * spec.lambda * F::FRAC_1_PI();
    peak * kernel_profile(spec.alpha(), spec.z_scale() * x)
}
