use std::f64::consts::PI;

use qdelta::qexp::{q_of_n, QParam};
use qdelta::quadrature::{
    c_of_q_closed, c_of_q_numeric, integrate, pi_integral, pi_integral_direct, Interval, RParam,
};

#[test]
fn mellin_type_integral() {
    // ∫_0^∞ x^{s-1} / (1 + x) dx = π / sin(π s)
    for s in [0.3f64, 0.5, 0.7] {
        let res = integrate(|x: f64| x.powf(s - 1.0) / (1.0 + x), Interval::new(0.0, f64::INFINITY).unwrap(), 1e-10)
            .unwrap();
        let exact = PI / (PI * s).sin();
        assert!((res.value - exact).abs() < 1e-8, "s = {s}: {} vs {exact}", res.value);
    }
}

#[test]
fn half_integer_r_gives_pi() {
    for n in 1..=20u32 {
        let r = f64::from(n) / 2.0;
        let res = pi_integral(RParam::new(r).unwrap(), 1e-10).unwrap();
        assert!(res.converged);
        assert!((res.value - PI).abs() < 1e-8, "r = {r}: {}", res.value);
    }
}

#[test]
fn angle_form_agrees_with_direct_form() {
    // direct-form tails beyond 1e6 are below 1e6^{-2r} / r
    for r in [1.0f64, 1.5, 2.0, 3.7, 8.0] {
        let angle = pi_integral(RParam::new(r).unwrap(), 1e-10).unwrap();
        let direct = pi_integral_direct(RParam::new(r).unwrap(), 1e6, 1e-9).unwrap();
        assert!((angle.value - direct.value).abs() < 1e-6, "r = {r}: {} vs {}", angle.value, direct.value);
    }
}

#[test]
fn rational_family_matches_closed_form() {
    for n in 1..=50u64 {
        let q: QParam<f64> = q_of_n(n).unwrap();
        let closed = c_of_q_closed(q).unwrap();
        let numeric = c_of_q_numeric(q, 1e-12 * closed).unwrap();
        assert!((numeric.value - closed).abs() / closed < 1e-12, "n = {n}: {} vs {closed}", numeric.value);
    }
}

#[test]
fn figure_one_anchors() {
    let at = |q: f64| c_of_q_numeric(QParam::delta(q).unwrap(), 1e-10).unwrap().value;
    assert!((at(1.5) - 4.0 * PI).abs() < 1e-9);
    assert!((at(1.99) - 2.0 * PI / 0.01).abs() / (200.0 * PI) < 1e-9);
}
