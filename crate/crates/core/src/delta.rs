//! Numerical harness for the nascent delta `Δ_q(x, Λ)` and for q-plane-wave norms.
//!
//! All window integrals are taken in the scaled variable `z = (q - 1) Λ x`, where
//! `Δ_q(x, Λ) dx = K(z) dz` and `K` is [`nascent_kernel`]. Its oscillation and decay
//! then live on an O(1) scale whatever Λ is.
//!
//! Infinite windows are truncated at the point where the bound
//! `|K(z)| <= 1 / (π |z|^{1+2α})` times the test function's growth envelope leaves a
//! tail below `tol / 10`; that bound is added to the reported error.

use std::fmt;
use std::sync::Arc;

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::qexp::{nascent_kernel, q_modulus_sq, NascentDeltaSpec, QContext, QParam};
use crate::quadrature::{integrate_with, Interval, QuadConfig, QuadResult};

type Eval = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Growth bound `|f(x)| <= scale * |x|^power` for `|x| >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Envelope {
    pub scale: f64,
    pub power: f64,
}

impl Envelope {
    pub const BOUNDED: Envelope = Envelope { scale: 1.0, power: 0.0 };
}

/// A pointwise-evaluable function with known value at the origin.
#[derive(Clone)]
pub struct TestFunction {
    name: String,
    eval: Eval,
    f_at_zero: f64,
    natural_domain: Interval<f64>,
    envelope: Envelope,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("name", &self.name)
            .field("f_at_zero", &self.f_at_zero)
            .field("natural_domain", &self.natural_domain)
            .field("envelope", &self.envelope)
            .finish()
    }
}

impl TestFunction {
    /// Registers a function; fails if `eval(0)` disagrees with `f_at_zero` while 0 lies in
    /// the domain.
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f_at_zero: f64,
        natural_domain: Interval<f64>,
        envelope: Envelope,
    ) -> Result<Self> {
        let name = name.into();
        if natural_domain.lower() <= 0.0 && 0.0 <= natural_domain.upper() {
            let got = eval(0.0);
            if (got - f_at_zero).abs() > 1e-15 * f_at_zero.abs().max(1.0) {
                return Err(Error::BadTestFunction { name, expected: f_at_zero, got });
            }
        }
        Ok(Self { name, eval: Arc::new(eval), f_at_zero, natural_domain, envelope })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    pub fn f_at_zero(&self) -> f64 {
        self.f_at_zero
    }

    pub fn natural_domain(&self) -> Interval<f64> {
        self.natural_domain
    }

    pub fn envelope(&self) -> Envelope {
        self.envelope
    }

    pub fn constant() -> Self {
        Self::new("constant", |_| 1.0, 1.0, Interval::real_line(), Envelope::BOUNDED).unwrap()
    }

    pub fn gaussian() -> Self {
        Self::new("gaussian", |x| (-x * x).exp(), 1.0, Interval::real_line(), Envelope::BOUNDED)
            .unwrap()
    }

    pub fn lorentzian() -> Self {
        // 1/(1+x^2) <= x^-2
        let env = Envelope { scale: 1.0, power: -2.0 };
        Self::new("lorentzian", |x| 1.0 / (1.0 + x * x), 1.0, Interval::real_line(), env).unwrap()
    }

    /// `x^k`.
    pub fn monomial(k: u32) -> Self {
        let name = match k {
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let f_at_zero = if k == 0 { 1.0 } else { 0.0 };
        let env = Envelope { scale: 1.0, power: f64::from(k) };
        Self::new(name, move |x| x.powi(k as i32), f_at_zero, Interval::real_line(), env).unwrap()
    }

    /// `exp(-(x - shift)^2)`.
    pub fn shifted_gaussian(shift: f64) -> Self {
        Self::new(
            format!("gaussian_shift_{shift}"),
            move |x| (-(x - shift) * (x - shift)).exp(),
            (-shift * shift).exp(),
            Interval::real_line(),
            Envelope::BOUNDED,
        )
        .unwrap()
    }

    /// Looks up a registry entry by name.
    pub fn by_name(name: &str) -> Option<Self> {
        registry().into_iter().find(|f| f.name == name)
    }
}

/// Built-in functions: constant, Gaussian, Lorentzian, `x`, `x^2` and a Gaussian centred at 2.
pub fn registry() -> Vec<TestFunction> {
    vec![
        TestFunction::constant(),
        TestFunction::gaussian(),
        TestFunction::lorentzian(),
        TestFunction::monomial(1),
        TestFunction::monomial(2),
        TestFunction::shifted_gaussian(2.0),
    ]
}

/// Ascending cutoffs `Λ_1 < Λ_2 < ...` with ratio at least 10 between neighbours.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaLadder {
    values: Vec<f64>,
}

impl LambdaLadder {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let ok = values.len() >= 3
            && values[0] > 0.0
            && values.iter().all(|v| v.is_finite())
            && values.windows(2).all(|w| w[1] >= 10.0 * w[0]);
        if !ok {
            return Err(Error::InvalidLadder);
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn last(&self) -> f64 {
        *self.values.last().unwrap()
    }
}

impl Default for LambdaLadder {
    /// `{10^2, 10^3, 10^4, 10^5, 10^6}`
    fn default() -> Self {
        Self { values: vec![1e2, 1e3, 1e4, 1e5, 1e6] }
    }
}

/// Limit predicted by the sifting property for `∫_a^b f δ`.
pub fn expected_sifting_value(f: &TestFunction, window: Interval<f64>) -> f64 {
    let (a, b) = (window.lower(), window.upper());
    if a < 0.0 && 0.0 < b {
        f.f_at_zero()
    } else if a == 0.0 || b == 0.0 {
        0.5 * f.f_at_zero()
    } else {
        0.0
    }
}

/// Truncation radius in `z` for an infinite side, and the tail bound beyond it.
fn tail_cut(envelope: Envelope, alpha: f64, scale: f64, budget: f64) -> Result<(f64, f64)> {
    let excess = 2.0 * alpha - envelope.power;
    if excess <= 0.0 {
        return Err(Error::Divergent(format!(
            "kernel tail ~ |x|^-(1+{:.4}) against growth |x|^{}",
            2.0 * alpha,
            envelope.power
        )));
    }
    // ∫_Z^∞ scale (z/s)^p / (π z^{1+2α}) dz = scale Z^{p-2α} / (π s^p (2α - p))
    let bound = |z: f64| {
        (envelope.scale.ln() - excess * z.ln() - std::f64::consts::PI.ln() - envelope.power * scale.ln()
            - excess.ln())
        .exp()
    };
    let ln_z = (envelope.scale.ln()
        - budget.ln()
        - std::f64::consts::PI.ln()
        - envelope.power * scale.ln()
        - excess.ln())
        / excess;
    let z = ln_z.exp().max(scale).max(1.0);
    if !z.is_finite() || z > 1e300 {
        return Err(Error::Divergent(format!("tail below {budget:e} needs |z| > 1e300")));
    }
    Ok((z, bound(z)))
}

/// `0`, `±scale` and `±10^j` for every decade inside `[lower, upper]`, so that no panel
/// spans several decades of the power-law kernel tail.
fn kernel_breakpoints(scale: f64, lower: f64, upper: f64) -> Vec<f64> {
    let reach = lower.abs().max(upper.abs());
    let mut points = vec![0.0, scale, -scale];
    let mut decade = 1.0;
    while decade < reach {
        points.push(decade);
        points.push(-decade);
        decade *= 10.0;
    }
    points
}

/// `∫_window f(x) Δ_q(x, Λ) dx`.
pub fn sifting_functional(
    q: QParam<f64>,
    lambda: f64,
    f: &TestFunction,
    window: Interval<f64>,
    tol: f64,
) -> Result<QuadResult<f64>> {
    let spec = NascentDeltaSpec::new(q.value(), lambda)?;
    if !f.natural_domain().contains(&window) {
        return Err(Error::WindowOutsideDomain {
            function: f.name().to_string(),
            lower: window.lower(),
            upper: window.upper(),
        });
    }
    let scale = spec.z_scale();
    let alpha = spec.alpha();

    let mut truncation = 0.0;
    let mut lower = scale * window.lower();
    let mut upper = scale * window.upper();
    if !window.lower().is_finite() || !window.upper().is_finite() {
        let (z_cut, bound) = tail_cut(f.envelope(), alpha, scale, tol / 10.0)?;
        let finite_reach = [lower, upper].iter().filter(|v| v.is_finite()).fold(0.0f64, |m, v| m.max(v.abs()));
        let reach = z_cut.max(finite_reach);
        if !lower.is_finite() {
            lower = -reach;
            truncation += bound;
        }
        if !upper.is_finite() {
            upper = reach;
            truncation += bound;
        }
    }
    let config = QuadConfig::absolute(tol - truncation).with_breakpoints(kernel_breakpoints(scale, lower, upper));
    let integrand = |z: f64| f.eval(z / scale) * nascent_kernel(alpha, z);
    let mut result = integrate_with(integrand, Interval::new(lower, upper)?, &config)?;
    result.abs_error_estimate += truncation;
    Ok(result)
}

/// Functional value at one rung of the ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderPoint {
    pub lambda: f64,
    pub value: f64,
    pub abs_error: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SiftingReport {
    pub q: f64,
    pub function: String,
    pub window: (f64, f64),
    pub points: Vec<LadderPoint>,
    pub expected: f64,
    pub final_deviation: f64,
    /// `|value - expected|` non-increasing along the ladder, up to twice the quadrature
    /// tolerance.
    pub monotone_convergence: bool,
}

impl SiftingReport {
    pub fn deviations(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| (p.value - self.expected).abs())
    }

    pub fn all_converged(&self) -> bool {
        self.points.iter().all(|p| p.converged)
    }
}

pub fn sifting_scan(
    q: QParam<f64>,
    f: &TestFunction,
    window: Interval<f64>,
    ladder: &LambdaLadder,
    tol: f64,
) -> Result<SiftingReport> {
    let expected = expected_sifting_value(f, window);
    let points = ladder
        .values()
        .iter()
        .map(|&lambda| {
            sifting_functional(q, lambda, f, window, tol).map(|r| LadderPoint {
                lambda,
                value: r.value,
                abs_error: r.abs_error_estimate,
                converged: r.converged,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let deviations: Vec<f64> = points.iter().map(|p| (p.value - expected).abs()).collect();
    let slack = 2.0 * tol;
    let monotone_convergence = deviations.windows(2).all(|w| w[1] <= w[0] + slack);
    Ok(SiftingReport {
        q: q.value(),
        function: f.name().to_string(),
        window: (window.lower(), window.upper()),
        expected,
        final_deviation: *deviations.last().unwrap(),
        points,
        monotone_convergence,
    })
}

/// Relative accuracy requested for Taylor-term integrals.
pub const JK_REL_TOL: f64 = 1e-10;

/// Taylor-term integral
/// `J_k = 1/((q-1)^k Λ^k k!) ∫_{(q-1)Λa}^{(q-1)Λb} z^{k-1} sin(2α atan z) / (π (1+z^2)^α) dz`.
///
/// Evaluated as `∫ (z/s)^k / k! K(z) dz`, which keeps every factor O(1) even at
/// `Λ = 10^20`. For `k = 0` this is the window mass of the kernel, tending to 1, 1/2
/// or 0. The window is split at 0 so each half is refined to relative accuracy
/// independently; odd terms on symmetric windows then cancel to rounding level.
pub fn jk_term(q: QParam<f64>, lambda: f64, k: u32, window: Interval<f64>) -> Result<QuadResult<f64>> {
    let spec = NascentDeltaSpec::new(q.value(), lambda)?;
    if !window.is_finite() {
        return Err(Error::InvalidInterval { lower: window.lower(), upper: window.upper() });
    }
    let scale = spec.z_scale();
    let alpha = spec.alpha();
    let inv_factorial = (1..=k).fold(1.0, |acc, j| acc / f64::from(j));
    let integrand = |z: f64| (z / scale).powi(k as i32) * inv_factorial * nascent_kernel(alpha, z);
    let (lo, hi) = (scale * window.lower(), scale * window.upper());
    let config = QuadConfig::relative(JK_REL_TOL).with_breakpoints(kernel_breakpoints(scale, lo, hi));

    if lo < 0.0 && 0.0 < hi {
        let left = integrate_with(integrand, Interval::new(lo, 0.0)?, &config)?;
        let right = integrate_with(integrand, Interval::new(0.0, hi)?, &config)?;
        Ok(left.combine(right))
    } else {
        integrate_with(integrand, Interval::new(lo, hi)?, &config)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JkRow {
    pub lambda: f64,
    pub k: u32,
    pub value: f64,
    pub abs_error: f64,
    pub converged: bool,
}

/// `J_k` for every `Λ` in `lambdas` and `k` in `0..=k_max`, ordered by `(Λ, k)`.
pub fn jk_table(q: QParam<f64>, lambdas: &[f64], k_max: u32, window: Interval<f64>) -> Result<Vec<JkRow>> {
    let mut rows = Vec::with_capacity(lambdas.len() * (k_max as usize + 1));
    for &lambda in lambdas {
        for k in 0..=k_max {
            let r = jk_term(q, lambda, k, window)?;
            rows.push(JkRow { lambda, k, value: r.value, abs_error: r.abs_error_estimate, converged: r.converged });
        }
    }
    Ok(rows)
}

fn wave_q(q: QParam<f64>) -> Result<f64> {
    let value = q.value();
    if !(value > 1.0 && value < 3.0) {
        return Err(Error::QOutOfDomain { q: value, context: QContext::Wave });
    }
    Ok(value)
}

fn nonzero_xi(xi: f64) -> Result<f64> {
    if xi == 0.0 || !xi.is_finite() {
        return Err(Error::NotPositive { what: "|xi|", value: xi.abs() });
    }
    Ok(xi.abs())
}

/// `N = [(q-1)|ξ| Γ(1/(q-1)) / (√π Γ((3-q)/(2(q-1))))]^{1/2}`, from log-Gamma.
pub fn wave_norm_closed(q: QParam<f64>, xi: f64) -> Result<f64> {
    let q = wave_q(q)?;
    let xi = nonzero_xi(xi)?;
    let qm1 = q - 1.0;
    let ln_inv_sq = (qm1 * xi).ln() + ln_gamma(1.0 / qm1)
        - 0.5 * std::f64::consts::PI.ln()
        - ln_gamma((3.0 - q) / (2.0 * qm1));
    Ok((0.5 * ln_inv_sq).exp())
}

/// `∫_{-X}^{X} |e_q(iξx)|^2 dx`; accepts `q = 1`, where the integrand is identically 1.
pub fn truncated_norm_integral(q: QParam<f64>, xi: f64, x_max: f64, tol: f64) -> Result<QuadResult<f64>> {
    nonzero_xi(xi)?;
    let integrand = |x: f64| q_modulus_sq(q, xi * x);
    let half = integrate_with(integrand, Interval::new(0.0, x_max)?, &QuadConfig::absolute(tol / 2.0))?;
    Ok(half.scaled(2.0))
}

/// Closed-form and quadrature normalization constants of a q-plane wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveNorm {
    pub q: f64,
    pub xi: f64,
    pub n_closed: f64,
    pub n_numeric: f64,
    /// Quadrature of `∫ |e_q(iξx)|^2 dx = 1 / N^2`, truncation bound included.
    pub integral: QuadResult<f64>,
}

impl WaveNorm {
    pub fn rel_deviation(&self) -> f64 {
        (self.n_numeric - self.n_closed).abs() / self.n_closed
    }
}

/// Compares `N` with `[∫ |e_q(iξx)|^2 dx]^{-1/2}`; `tol` is absolute on the integral.
///
/// The integrand decays like `|x|^{-2/(q-1)}`, very slowly as `q -> 3`; the range is cut
/// where the power-law tail drops below `tol / 20` per side.
pub fn wave_norm_check(q: QParam<f64>, xi: f64, tol: f64) -> Result<WaveNorm> {
    let qv = wave_q(q)?;
    let xi_abs = nonzero_xi(xi)?;
    let n_closed = wave_norm_closed(q, xi)?;

    let c = (qv - 1.0) * xi_abs;
    let two_p = 2.0 / (qv - 1.0);
    // ∫_X^∞ (c x)^{-2p} dx = c^{-2p} X^{1-2p} / (2p - 1)
    let tail_budget = tol / 20.0;
    let ln_x = ((tail_budget * (two_p - 1.0)).ln() + two_p * c.ln()) / (1.0 - two_p);
    let x_max = ln_x.exp().max(10.0 / c);
    if !x_max.is_finite() || x_max > 1e300 {
        return Err(Error::Divergent(format!("norm tail below {tail_budget:e} needs |x| > 1e300")));
    }
    let tail = (-two_p * c.ln() + (1.0 - two_p) * x_max.ln() - (two_p - 1.0).ln()).exp();

    let integrand = |x: f64| q_modulus_sq(q, xi * x);
    let decades = (c * x_max).log10().ceil() as i32;
    let config = QuadConfig::absolute(0.4 * tol).with_breakpoints((0..=decades).map(|j| 10f64.powi(j) / c));
    let half = integrate_with(integrand, Interval::new(0.0, x_max)?, &config)?;
    let mut integral = half.scaled(2.0);
    integral.abs_error_estimate += 2.0 * tail;
    Ok(WaveNorm { q: qv, xi, n_closed, n_numeric: integral.value.sqrt().recip(), integral })
}
