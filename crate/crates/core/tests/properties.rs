use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

use qdelta::exactpi::{half_integer_gamma_ratio, trig_identity_check};
use qdelta::qexp::{nascent_delta, q_cos, q_exp_imag, q_modulus_sq, q_sin, NascentDeltaSpec, QParam};
use qdelta::quadrature::{integrate, Interval};

fn wave_q() -> impl Strategy<Value = f64> {
    1.001f64..2.999
}

fn signed_magnitude() -> impl Strategy<Value = f64> {
    (-4.0f64..3.0, any::<bool>()).prop_map(|(e, neg)| if neg { -(10f64.powf(e)) } else { 10f64.powf(e) })
}

proptest! {
    #[test]
    fn q_cos_even_q_sin_odd(q in wave_q(), x in signed_magnitude()) {
        let qp = QParam::wave(q).unwrap();
        prop_assert_eq!(q_cos(qp, x), q_cos(qp, -x));
        prop_assert_eq!(q_sin(qp, x), -q_sin(qp, -x));
    }

    #[test]
    fn modulus_decays_with_distance(q in wave_q(), x in 0.0f64..1e3, step in 0.0f64..1e3) {
        let qp = QParam::wave(q).unwrap();
        prop_assert!(q_modulus_sq(qp, x + step) <= q_modulus_sq(qp, x));
        prop_assert!(q_modulus_sq(qp, x) <= 1.0);
    }

    #[test]
    fn pythagorean(q in wave_q(), x in signed_magnitude()) {
        let qp = QParam::wave(q).unwrap();
        let (c, s) = (q_cos(qp, x), q_sin(qp, x));
        let m = q_modulus_sq(qp, x);
        prop_assert!((c * c + s * s - m).abs() <= 8.0 * f64::EPSILON * m);
    }

    #[test]
    fn principal_branch_matches_complex_power(q in wave_q(), x in -50.0f64..50.0) {
        let qp = QParam::wave(q).unwrap();
        let z = q_exp_imag(qp, x);
        let base = Complex64::new(1.0, (1.0 - q) * x);
        let oracle = base.powf(1.0 / (1.0 - q));
        // the angle atan((q-1)x)/(q-1) amplifies rounding by up to |x|
        let tol = 64.0 * f64::EPSILON * (1.0 + x.abs()) * oracle.norm().max(1e-300);
        prop_assert!((z.re - oracle.re).abs() <= tol, "{} vs {}", z.re, oracle.re);
        prop_assert!((z.im - oracle.im).abs() <= tol, "{} vs {}", z.im, oracle.im);
    }

    #[test]
    fn nascent_delta_even_and_peaked(q in 1.01f64..1.99, lambda in 1.0f64..1e6, x in signed_magnitude()) {
        let spec = NascentDeltaSpec::new(q, lambda).unwrap();
        prop_assert_eq!(nascent_delta(spec, x), nascent_delta(spec, -x));
        let peak = (2.0 - q) * lambda / std::f64::consts::PI;
        prop_assert!(nascent_delta(spec, x).abs() <= peak * (1.0 + 1e-12));
    }

    #[test]
    fn tighter_tolerance_never_costs_less(power in -0.9f64..3.0, tol_exp in 3.0f64..11.0) {
        let tol = 10f64.powf(-tol_exp);
        let interval = Interval::new(0.0, 1.0).unwrap();
        let f = |x: f64| x.powf(power) * (3.0 * x).cos();
        let coarse = integrate(f, interval, tol).unwrap();
        let fine = integrate(f, interval, (tol / 2.0).max(1e-13)).unwrap();
        prop_assert!(fine.evaluations >= coarse.evaluations);
    }

    #[test]
    fn half_integer_gamma_functional_equation(m in 0u64..400) {
        let step = half_integer_gamma_ratio(m + 1) / half_integer_gamma_ratio(m);
        prop_assert_eq!(step, BigRational::new((2 * m + 1).into(), 2.into()));
    }

    #[test]
    fn multiple_angle_sine(m in 1u32..=20, theta in -std::f64::consts::PI..std::f64::consts::PI) {
        let (lhs, rhs) = trig_identity_check(m, theta);
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }
}
