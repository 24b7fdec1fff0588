//! Adaptive Gauss-Kronrod quadrature and the arctan family of π integrals.
//!
//! The engine keeps a priority queue of panels ordered by their embedded error
//! estimate `|K15 - G7|` and always bisects the worst panel. The refinement order
//! therefore does not depend on the tolerance; a tighter tolerance only runs the same
//! sequence longer.
//!
//! Infinite endpoints are compactified per segment:
//! `x = t / (1 - t^2)` on `(-1, 1)` for the whole line, `x = a + t / (1 - t)` and
//! `x = b - t / (1 - t)` on `[0, 1)` for half lines.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::qexp::{alpha_of_q, nascent_kernel, QParam};
use crate::scalar::Real;

/// Default evaluation budget per integration call.
pub const DEFAULT_MAX_EVALUATIONS: u64 = 10_000_000;

/// Smallest tolerance accepted by [`integrate`].
pub const MIN_TOLERANCE: f64 = 1e-13;

/// Below this θ the removable singularity of the θ-form is replaced by its expansion.
pub const THETA_SERIES_SWITCH: f64 = 1e-6;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Integration limits; either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<F> {
    lower: F,
    upper: F,
}

impl<F: Real> Interval<F> {
    pub fn new(lower: F, upper: F) -> Result<Self> {
        if lower.is_nan() || upper.is_nan() || lower >= upper {
            return Err(Error::InvalidInterval { lower: lower.as_f64(), upper: upper.as_f64() });
        }
        Ok(Self { lower, upper })
    }

    pub fn real_line() -> Self {
        Self { lower: F::neg_infinity(), upper: F::infinity() }
    }

    pub fn lower(&self) -> F {
        self.lower
    }

    pub fn upper(&self) -> F {
        self.upper
    }

    pub fn is_finite(&self) -> bool {
        self.lower.is_finite() && self.upper.is_finite()
    }

    pub fn contains(&self, other: &Interval<F>) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }
}

/// Outcome of a quadrature call. Budget exhaustion is reported through `converged`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<F> {
    pub value: F,
    pub abs_error_estimate: F,
    pub evaluations: u64,
    pub converged: bool,
}

impl<F: Real> QuadResult<F> {
    /// Multiplies value and error by `factor`.
    pub fn scaled(self, factor: F) -> Self {
        Self {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            ..self
        }
    }

    /// Sum of two independent pieces of one integral.
    pub fn combine(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            abs_error_estimate: self.abs_error_estimate + other.abs_error_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }
}

/// Stopping rule and budget for [`integrate_with`].
///
/// Refinement stops once the summed error estimate is at most
/// `max(abs_tol, rel_tol * |value|)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadConfig<F> {
    pub abs_tol: F,
    pub rel_tol: F,
    pub max_evaluations: u64,
    /// Extra split points; those outside the open interval are ignored.
    pub breakpoints: Vec<F>,
}

impl<F: Real> QuadConfig<F> {
    pub fn absolute(tol: F) -> Self {
        Self {
            abs_tol: tol,
            rel_tol: F::zero(),
            max_evaluations: DEFAULT_MAX_EVALUATIONS,
            breakpoints: Vec::new(),
        }
    }

    pub fn relative(rel_tol: F) -> Self {
        Self { abs_tol: F::min_positive_value(), rel_tol, ..Self::absolute(F::zero()) }
    }

    pub fn with_breakpoints(mut self, points: impl IntoIterator<Item = F>) -> Self {
        self.breakpoints.extend(points);
        self
    }

    pub fn with_budget(mut self, max_evaluations: u64) -> Self {
        self.max_evaluations = max_evaluations;
        self
    }

    fn validate(&self) -> Result<()> {
        let floor = F::lit(MIN_TOLERANCE);
        if self.abs_tol.is_nan() || self.rel_tol.is_nan() || (self.abs_tol < floor && self.rel_tol < floor)
        {
            return Err(Error::ToleranceTooSmall(self.abs_tol.max(self.rel_tol).as_f64()));
        }
        Ok(())
    }
}

/// How a panel variable `t` maps to `x`, for a segment `[lo, hi]` of the interval `[A, B]`.
///
/// Finite segments are split in two halves parametrized by the distance from their
/// outer end, so panels can shrink towards an endpoint far below one ulp of `x`.
#[derive(Debug, Clone, Copy)]
enum Map<F> {
    /// `x = lo + t`
    FromLower { lo: F, hi: F, a: F, b: F },
    /// `x = hi - t`
    FromUpper { lo: F, hi: F, a: F, b: F },
    /// `x = start + 1/u - 1`, `u` in `(0, 1]`
    UpperTail { start: F, a: F },
    /// `x = start - 1/u + 1`, `u` in `(0, 1]`
    LowerTail { start: F, b: F },
}

impl<F: Real> Map<F> {
    /// Integrand `f(x, x - A, B - x)` times the Jacobian, at panel variable `t`.
    #[inline]
    fn apply<G: Fn(F, F, F) -> F>(&self, f: &G, t: F) -> F {
        match *self {
            Map::FromLower { lo, hi, a, b } => {
                f(lo + t, (lo - a) + t, (b - hi) + ((hi - lo) - t))
            }
            Map::FromUpper { lo, hi, a, b } => {
                f(hi - t, (lo - a) + ((hi - lo) - t), (b - hi) + t)
            }
            Map::UpperTail { start, a } => {
                let d = t.recip() - F::one();
                f(start + d, (start - a) + d, F::infinity()) / t / t
            }
            Map::LowerTail { start, b } => {
                let d = t.recip() - F::one();
                f(start - d, F::infinity(), (b - start) + d) / t / t
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel<F> {
    a: F,
    b: F,
    value: F,
    error: F,
    map: Map<F>,
}

impl<F: Real> PartialEq for Panel<F> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<F: Real> Eq for Panel<F> {}
impl<F: Real> PartialOrd for Panel<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<F: Real> Ord for Panel<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.a.partial_cmp(&self.a).unwrap_or(Ordering::Equal))
    }
}

fn kronrod15<F: Real, G: Fn(F, F, F) -> F>(f: &G, map: Map<F>, a: F, b: F) -> Panel<F> {
    let center = F::lit(0.5) * (a + b);
    let half_len = F::lit(0.5) * (b - a);
    let fc = map.apply(f, center);
    let mut kronrod = fc * F::lit(WGK[7]);
    let mut gauss = fc * F::lit(WG[3]);
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half_len * F::lit(x);
        let pair = map.apply(f, center - dx) + map.apply(f, center + dx);
        kronrod = kronrod + F::lit(w) * pair;
        if j % 2 == 1 {
            gauss = gauss + F::lit(WG[j / 2]) * pair;
        }
    }
    let value = kronrod * half_len;
    let error = ((kronrod - gauss) * half_len).abs();
    Panel { a, b, value, error, map }
}

const EVALS_PER_PANEL: u64 = 15;

/// Panels narrower than this many ulps of their endpoints are not split further; the
/// outermost Kronrod node then still rounds strictly inside the panel.
const MIN_PANEL_ULPS: f64 = 512.0;

/// `∫ f` over `interval` to absolute tolerance `tol` (at least 1e-13).
pub fn integrate<F: Real, G: Fn(F) -> F>(f: G, interval: Interval<F>, tol: F) -> Result<QuadResult<F>> {
    if tol.is_nan() || tol < F::lit(MIN_TOLERANCE) {
        return Err(Error::ToleranceTooSmall(tol.as_f64()));
    }
    integrate_with(f, interval, &QuadConfig::absolute(tol))
}

pub fn integrate_with<F: Real, G: Fn(F) -> F>(
    f: G,
    interval: Interval<F>,
    config: &QuadConfig<F>,
) -> Result<QuadResult<F>> {
    integrate_complement_with(|x, _, _| f(x), interval, config)
}

/// Like [`integrate_with`], but the integrand is called as `f(x, x - a, b - x)` where
/// `a`, `b` are the ends of `interval`; a distance is `+inf` for an infinite end.
///
/// The distances keep full relative precision where `x` itself cannot resolve them,
/// e.g. `cos θ = sin(π/2 - θ)` next to `θ = π/2`.
pub fn integrate_complement_with<F: Real, G: Fn(F, F, F) -> F>(
    f: G,
    interval: Interval<F>,
    config: &QuadConfig<F>,
) -> Result<QuadResult<F>> {
    config.validate()?;

    let mut cuts = vec![interval.lower];
    let mut inner: Vec<F> = config
        .breakpoints
        .iter()
        .copied()
        .filter(|&p| p > interval.lower && p < interval.upper)
        .collect();
    if !interval.lower.is_finite() && !interval.upper.is_finite() {
        inner.push(F::zero());
    }
    inner.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
    inner.dedup();
    cuts.extend(inner);
    cuts.push(interval.upper);

    let mut heap = BinaryHeap::new();
    let mut evaluations = 0u64;
    let (a, b) = (interval.lower, interval.upper);
    for pair in cuts.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let pieces = match (lo.is_finite(), hi.is_finite()) {
            (true, true) => {
                let half = F::lit(0.5) * (hi - lo);
                vec![
                    (Map::FromLower { lo, hi, a, b }, half),
                    (Map::FromUpper { lo, hi, a, b }, (hi - lo) - half),
                ]
                .into_iter()
                .map(|(map, len)| (map, F::zero(), len))
                .collect::<Vec<_>>()
            }
            (true, false) => {
                let start = lo + F::one();
                vec![
                    (Map::FromLower { lo, hi: start, a, b }, F::zero(), F::one()),
                    (Map::UpperTail { start, a }, F::zero(), F::one()),
                ]
            }
            (false, true) => {
                let start = hi - F::one();
                vec![
                    (Map::FromUpper { lo: start, hi, a, b }, F::zero(), F::one()),
                    (Map::LowerTail { start, b }, F::zero(), F::one()),
                ]
            }
            (false, false) => unreachable!("the real line is always cut at 0"),
        };
        for (map, t0, t1) in pieces {
            heap.push(kronrod15(&f, map, t0, t1));
            evaluations += EVALS_PER_PANEL;
        }
    }

    let target = |value: F| config.abs_tol.max(config.rel_tol * value.abs());
    let exact_totals = |heap: &BinaryHeap<Panel<F>>, frozen: &[Panel<F>]| {
        heap.iter().chain(frozen.iter()).fold((F::zero(), F::zero()), |(v, e), p| (v + p.value, e + p.error))
    };

    let mut frozen: Vec<Panel<F>> = Vec::new();
    let (mut value, mut error) = exact_totals(&heap, &frozen);
    let mut steps = 0u64;
    let converged = loop {
        if !value.is_finite() || !error.is_finite() {
            break false;
        }
        if error <= target(value) {
            // running sums drift; confirm before stopping
            let (v, e) = exact_totals(&heap, &frozen);
            value = v;
            error = e;
            if error <= target(value) {
                break true;
            }
        }
        if evaluations + 2 * EVALS_PER_PANEL > config.max_evaluations {
            break false;
        }
        let Some(worst) = heap.pop() else {
            break error <= target(value);
        };
        let mid = F::lit(0.5) * (worst.a + worst.b);
        let width = worst.b - worst.a;
        if !(mid > worst.a && mid < worst.b)
            || width <= F::lit(MIN_PANEL_ULPS) * F::epsilon() * worst.a.abs().max(worst.b.abs())
            || width <= F::min_positive_value() / F::epsilon()
        {
            frozen.push(worst);
            continue;
        }
        let left = kronrod15(&f, worst.map, worst.a, mid);
        let right = kronrod15(&f, worst.map, mid, worst.b);
        evaluations += 2 * EVALS_PER_PANEL;
        value = value - worst.value + left.value + right.value;
        error = error - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
        steps += 1;
        if steps.is_multiple_of(256) {
            (value, error) = exact_totals(&heap, &frozen);
        }
    };
    let (value, error) = exact_totals(&heap, &frozen);
    Ok(QuadResult { value, abs_error_estimate: error, evaluations, converged })
}

/// Positive exponent `r` of the arctan integral family.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RParam<F>(F);

impl<F: Real> RParam<F> {
    pub fn new(r: F) -> Result<Self> {
        if !(r > F::zero() && r.is_finite()) {
            return Err(Error::NotPositive { what: "r", value: r.as_f64() });
        }
        Ok(Self(r))
    }

    pub fn value(&self) -> F {
        self.0
    }
}

/// `∫_{-∞}^{∞} sin(2r atan z) / (z (1 + z^2)^r) dz`, which equals π for every `r > 0`
/// on all grids checked.
///
/// With `z = tan θ` the integrand is even and becomes
/// `2 ∫_0^{π/2} sin(2rθ) cos^{2r-1}θ / sin θ dθ`. The range is split at `π/4`:
/// the lower half keeps θ (removable singularity at 0, limit `2r`), the upper half uses
/// `φ = π/2 - θ` so the possible `φ^{2r-1}` endpoint behaviour sits at the origin.
/// For `r < 1` the substitution `φ = u^{1/(2r)}` then makes that half smooth.
pub fn pi_integral<F: Real>(r: RParam<F>, tol: F) -> Result<QuadResult<F>> {
    let r = r.value();
    let two = F::lit(2.0);
    let quarter_pi = F::FRAC_PI_4();
    let half_tol = tol / two;

    let near = move |theta: F| {
        if theta < F::lit(THETA_SERIES_SWITCH) {
            let c = (F::lit(4.0) * r * r - F::one()) / F::lit(6.0) + (two * r - F::one()) / two;
            two * two * r * (F::one() - c * theta * theta)
        } else {
            two * (two * r * theta).sin() * theta.cos().powf(two * r - F::one()) / theta.sin()
        }
    };
    let near = integrate(near, Interval::new(F::zero(), quarter_pi)?, half_tol)?;

    let r_pi = r * F::PI();
    let far = if r < F::one() {
        let p = (two * r).recip();
        let u_max = quarter_pi.powf(two * r);
        let smooth = move |u: F| {
            let phi = u.powf(p);
            let sinc = if phi == F::zero() { F::one() } else { phi.sin() / phi };
            two * p * (r_pi - two * r * phi).sin() * sinc.powf(two * r - F::one()) / phi.cos()
        };
        integrate(smooth, Interval::new(F::zero(), u_max)?, half_tol)?
    } else {
        let plain = move |phi: F| {
            two * (r_pi - two * r * phi).sin() * phi.sin().powf(two * r - F::one()) / phi.cos()
        };
        integrate(plain, Interval::new(F::zero(), quarter_pi)?, half_tol)?
    };
    Ok(near.combine(far))
}

/// The same integral in the original variable over `[-z_max, z_max]`; cross-check only.
///
/// The neglected tails are below `z_max^{-2r} / r`.
pub fn pi_integral_direct<F: Real>(r: RParam<F>, z_max: F, tol: F) -> Result<QuadResult<F>> {
    let r = r.value();
    let integrand = move |z: F| F::PI() * nascent_kernel(r, z);
    let config = QuadConfig::absolute(tol / F::lit(2.0)).with_breakpoints([F::one(), F::lit(1e3)]);
    let half = integrate_with(integrand, Interval::new(F::zero(), z_max)?, &config)?;
    Ok(half.scaled(F::lit(2.0)))
}

/// `c(q) = (2 / (2 - q)) ∫ sin(2α atan z) / (z (1 + z^2)^α) dz` with `α = α(q)`.
///
/// `tol` bounds the absolute error of `c(q)` itself.
pub fn c_of_q_numeric<F: Real>(q: QParam<F>, tol: F) -> Result<QuadResult<F>> {
    let alpha = alpha_of_q(q)?;
    let factor = F::lit(2.0) / (F::lit(2.0) - q.value());
    let integral = pi_integral(RParam::new(alpha.value())?, tol / factor)?;
    Ok(integral.scaled(factor))
}

/// Closed form `c(q) = 2π / (2 - q)`, valid on `[1, 2)`.
pub fn c_of_q_closed<F: Real>(q: QParam<F>) -> Result<F> {
    let q = q.value();
    if !(q >= F::one() && q < F::lit(2.0)) {
        return Err(Error::QOutOfDomain { q: q.as_f64(), context: crate::qexp::QContext::Delta });
    }
    Ok(F::lit(2.0) * F::PI() / (F::lit(2.0) - q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn linear_integrand() {
        let res = integrate(|x: f64| x, Interval::new(0.0, 1.0).unwrap(), 1e-12).unwrap();
        assert!(res.converged);
        assert!((res.value - 0.5).abs() < 1e-15);
        assert_eq!(res.evaluations, 30);
    }

    #[test]
    fn lorentzian_over_real_line() {
        let res = integrate(|x: f64| 1.0 / (1.0 + x * x), Interval::real_line(), 1e-10).unwrap();
        assert!(res.converged);
        assert!((res.value - PI).abs() < 1e-10, "{res:?}");
    }

    #[test]
    fn half_lines() {
        let upper = integrate(|x: f64| (-x).exp(), Interval::new(1.0, f64::INFINITY).unwrap(), 1e-12).unwrap();
        assert!((upper.value - (-1.0f64).exp()).abs() < 1e-12);
        let lower = integrate(|x: f64| x.exp(), Interval::new(f64::NEG_INFINITY, 0.0).unwrap(), 1e-12).unwrap();
        assert!((lower.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn endpoint_singularity() {
        // ∫_0^{π/2} cos^{-1/2} = B(1/4, 1/2) / 2 = Γ(1/4) Γ(1/2) / (2 Γ(3/4))
        use statrs::function::gamma::gamma;
        let beta_half = gamma(0.25) * gamma(0.5) / (2.0 * gamma(0.75));
        let cos_from_end = |t: f64, _: f64, to_end: f64| if t < 1.0 { t.cos() } else { to_end.sin() }.powf(-0.5);
        let config = QuadConfig::absolute(1e-10);
        let res = integrate_complement_with(cos_from_end, Interval::new(0.0, PI / 2.0).unwrap(), &config).unwrap();
        assert!(res.converged, "{res:?}");
        assert!((res.value - beta_half).abs() < 1e-9, "{} vs {}", res.value, beta_half);
    }

    #[test]
    fn complement_beats_rounded_endpoint() {
        // cos(t) near the rounded π/2 carries an absolute error of about one ulp of π/2
        use statrs::function::gamma::gamma;
        let beta_half = gamma(0.25) * gamma(0.5) / (2.0 * gamma(0.75));
        let interval = Interval::new(0.0, PI / 2.0).unwrap();
        let plain = integrate(|t: f64| t.cos().powf(-0.5), interval, 1e-10).unwrap();
        let config = QuadConfig::absolute(1e-10);
        let exact = integrate_complement_with(|_: f64, t: f64, to_end: f64| {
            if t < 1.0 { t.cos() } else { to_end.sin() }.powf(-0.5)
        }, interval, &config).unwrap();
        assert!(plain.value.is_finite());
        assert!((exact.value - beta_half).abs() < (plain.value - beta_half).abs());
    }

    #[test]
    fn complement_distances() {
        let probe = |x: f64, lo: f64, hi: f64| {
            assert!((x - 2.0 - lo).abs() < 1e-12 && (5.0 - x - hi).abs() < 1e-12);
            1.0
        };
        let config = QuadConfig::absolute(1e-12).with_breakpoints([3.0]);
        let res = integrate_complement_with(probe, Interval::new(2.0, 5.0).unwrap(), &config).unwrap();
        assert!((res.value - 3.0).abs() < 1e-14);
    }

    #[test]
    fn breakpoints_are_honoured() {
        let f = |x: f64| if x < 0.3 { 0.0 } else { 1.0 };
        let config = QuadConfig::absolute(1e-12).with_breakpoints([0.3, 7.0]);
        let res = integrate_with(f, Interval::new(0.0, 1.0).unwrap(), &config).unwrap();
        assert!(res.converged);
        assert!((res.value - 0.7).abs() < 1e-14);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let config = QuadConfig::absolute(1e-12).with_budget(100);
        let res = integrate_with(|x: f64| x.recip().sqrt().sin(), Interval::new(0.0, 1.0).unwrap(), &config).unwrap();
        assert!(!res.converged);
        assert!(res.evaluations <= 100);
        assert!(res.value.is_finite());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(integrate(|x: f64| x, Interval::new(0.0, 1.0).unwrap(), 1e-14).is_err());
        assert!(RParam::new(0.0).is_err());
        assert!(RParam::new(-1.0).is_err());
    }

    #[test]
    fn closed_form_anchors() {
        for r in [0.5, 1.0] {
            let res = pi_integral(RParam::new(r).unwrap(), 1e-12).unwrap();
            assert!(res.converged);
            assert!((res.value - PI).abs() < 1e-10, "r = {r}: {}", res.value);
        }
    }

    #[test]
    fn c_of_q_values() {
        let q = QParam::delta(1.5).unwrap();
        let c = c_of_q_numeric(q, 1e-10).unwrap();
        assert!((c.value - 4.0 * PI).abs() < 1e-9);
        assert!((c_of_q_closed(q).unwrap() - 4.0 * PI).abs() < 1e-14);
        let q = QParam::delta(4.0 / 3.0).unwrap();
        assert!((c_of_q_numeric(q, 1e-10).unwrap().value - 3.0 * PI).abs() < 1e-9);
        assert!((c_of_q_closed(QParam::delta(1.0).unwrap()).unwrap() - 2.0 * PI).abs() < 1e-15);
        assert!((c_of_q_closed(QParam::delta(1.9).unwrap()).unwrap() - 20.0 * PI).abs() < 1e-12);
        assert!(c_of_q_numeric(QParam::delta(1.0).unwrap(), 1e-10).is_err());
        assert!(c_of_q_closed(QParam::wave(2.5).unwrap()).is_err());
    }
}
