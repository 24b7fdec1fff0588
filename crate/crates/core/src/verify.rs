//! Acceptance checks bundling the numerical claims into pass/fail outcomes.
//!
//! Each check returns a [`CheckOutcome`] with its worst observed deviation, the
//! threshold it was held to, and one [`DetailRow`] per evaluated case.

use std::f64::consts::PI;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::delta::{
    jk_table, sifting_scan, truncated_norm_integral, wave_norm_check, wave_norm_closed, LambdaLadder,
    TestFunction,
};
use crate::exactpi::{pi_sum_scan, trig_identity_check};
use crate::qexp::{q_cos, q_exp_imag, q_modulus_sq, q_sin, QParam};
use crate::quadrature::{c_of_q_closed, c_of_q_numeric, pi_integral, Interval, RParam};

pub const PI_INTEGRAL_TOL: f64 = 1e-8;
pub const PI_INTEGRAL_ANCHOR_TOL: f64 = 1e-10;
pub const C_OF_Q_REL_TOL: f64 = 1e-6;
pub const SIFTING_TOL: f64 = 5e-3;
/// Absolute quadrature tolerance for each sifting functional.
pub const SIFTING_QUAD_TOL: f64 = 1e-6;
pub const JK_ODD_TOL: f64 = 1e-10;
pub const TRIG_IDENTITY_TOL: f64 = 1e-12;
pub const WAVE_NORM_REL_TOL: f64 = 1e-6;
pub const WAVE_ANCHOR_TOL: f64 = 1e-10;
pub const WAVE_DIVERGENCE_FACTOR: f64 = 50.0;
pub const PYTHAGOREAN_ULPS: f64 = 8.0;
pub const CONTINUITY_TOL: f64 = 1e-4;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// How much of the parameter space to sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// Coarse grids and `n <= 200` for the exact sums.
    Quick,
    /// Full grids and `n <= 5000`.
    Full,
}

impl Profile {
    pub fn pi_sum_n_max(self) -> u64 {
        match self {
            Profile::Quick => 200,
            Profile::Full => 5000,
        }
    }

    pub fn r_steps(self) -> usize {
        match self {
            Profile::Quick => 10,
            Profile::Full => 40,
        }
    }

    pub fn q_steps(self) -> usize {
        match self {
            Profile::Quick => 12,
            Profile::Full => 50,
        }
    }

    pub fn random_samples(self) -> usize {
        match self {
            Profile::Quick => 1_000,
            Profile::Full => 10_000,
        }
    }

    pub fn sifting_qs(self) -> Vec<f64> {
        match self {
            Profile::Quick => vec![1.2, 1.6],
            Profile::Full => vec![1.2, 1.4, 1.6, 1.8],
        }
    }
}

/// One evaluated case of a check.
#[derive(Debug, Clone, PartialEq)]
pub struct DetailRow {
    pub check: &'static str,
    pub case: String,
    pub deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Largest deviation relative to its own tolerance, reported in the tolerance's units.
    pub worst: f64,
    pub tolerance: f64,
    /// A quadrature gave up on its evaluation budget somewhere in the check.
    pub budget_exhausted: bool,
    pub rows: Vec<DetailRow>,
    pub note: String,
}

impl CheckOutcome {
    fn from_rows(name: &'static str, tolerance: f64, rows: Vec<DetailRow>) -> Self {
        let passed = !rows.is_empty() && rows.iter().all(|r| r.passed);
        let worst = rows
            .iter()
            .max_by(|a, b| (a.deviation / a.tolerance).total_cmp(&(b.deviation / b.tolerance)))
            .map_or(f64::NAN, |r| r.deviation);
        Self { name, passed, worst, tolerance, budget_exhausted: false, rows, note: String::new() }
    }

    fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.passed).count()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<22} cases={:<5} failed={:<4} worst={:.3e} tol={:.1e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.rows.len(),
            self.failures(),
            self.worst,
            self.tolerance
        )?;
        if self.budget_exhausted {
            f.write_str(" budget-exhausted")?;
        }
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}

fn row(check: &'static str, case: String, deviation: f64, tolerance: f64) -> DetailRow {
    DetailRow { check, case, deviation, tolerance, passed: deviation < tolerance }
}

fn error_row(check: &'static str, case: String, tolerance: f64) -> DetailRow {
    DetailRow { check, case, deviation: f64::INFINITY, tolerance, passed: false }
}

/// `steps` points from `lo` to `hi` inclusive, evenly spaced.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..steps).map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64).collect(),
    }
}

/// `steps` points from `lo` to `hi` inclusive, evenly spaced in `ln`.
pub fn logspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    linspace(lo.ln(), hi.ln(), steps).into_iter().map(f64::exp).collect()
}

/// `S_n / π == 1` exactly for `n` in `1..=n_max`.
pub fn check_exact_pi(n_max: u64) -> CheckOutcome {
    let rows = pi_sum_scan(1, n_max)
        .into_iter()
        .map(|r| {
            let deviation = if r.is_pi() { 0.0 } else { 1.0 };
            DetailRow {
                check: "exact_pi",
                case: format!("n={} ratio={}", r.n, r.ratio),
                deviation,
                tolerance: 0.0,
                passed: r.is_pi(),
            }
        })
        .collect();
    let mut outcome = CheckOutcome::from_rows("exact_pi", 0.0, rows);
    outcome.worst = outcome.rows.iter().map(|r| r.deviation).fold(0.0, f64::max);
    outcome.note = format!("n <= {n_max}, bit-exact");
    outcome
}

/// `|I(r) - π|` on a log grid of `r` in `[0.05, 20]` plus the closed-form anchors.
pub fn check_pi_integral(r_steps: usize) -> CheckOutcome {
    let mut cases: Vec<(f64, f64)> = logspace(0.05, 20.0, r_steps)
        .into_iter()
        .map(|r| (r, PI_INTEGRAL_TOL))
        .collect();
    cases.push((0.5, PI_INTEGRAL_ANCHOR_TOL));
    cases.push((1.0, PI_INTEGRAL_ANCHOR_TOL));
    let results: Vec<_> = cases
        .par_iter()
        .map(|&(r, tol)| {
            let case = format!("r={r:.6}");
            match RParam::new(r).and_then(|rp| pi_integral(rp, tol / 10.0)) {
                Ok(res) => (row("pi_integral", case, (res.value - PI).abs(), tol), !res.converged),
                Err(_) => (error_row("pi_integral", case, tol), false),
            }
        })
        .collect();
    let exhausted = results.iter().any(|(_, e)| *e);
    let mut outcome =
        CheckOutcome::from_rows("pi_integral", PI_INTEGRAL_TOL, results.into_iter().map(|(r, _)| r).collect());
    outcome.budget_exhausted = exhausted;
    outcome.note = format!("{r_steps} r in [0.05, 20] + anchors at {PI_INTEGRAL_ANCHOR_TOL:e}");
    outcome
}

/// Relative deviation of the quadrature `c(q)` from `2π / (2 - q)` on `[1.01, 1.99]`.
pub fn check_c_of_q(q_steps: usize) -> CheckOutcome {
    let results: Vec<_> = linspace(1.01, 1.99, q_steps)
        .par_iter()
        .map(|&q| {
            let case = format!("q={q:.6}");
            let computed = QParam::delta(q).and_then(|qp| {
                let closed = c_of_q_closed(qp)?;
                let numeric = c_of_q_numeric(qp, closed * C_OF_Q_REL_TOL / 100.0)?;
                Ok((closed, numeric))
            });
            match computed {
                Ok((closed, numeric)) => (
                    row("c_of_q", case, (numeric.value - closed).abs() / closed, C_OF_Q_REL_TOL),
                    !numeric.converged,
                ),
                Err(_) => (error_row("c_of_q", case, C_OF_Q_REL_TOL), false),
            }
        })
        .collect();
    let exhausted = results.iter().any(|(_, e)| *e);
    let mut outcome =
        CheckOutcome::from_rows("c_of_q", C_OF_Q_REL_TOL, results.into_iter().map(|(r, _)| r).collect());
    outcome.budget_exhausted = exhausted;
    outcome.note = format!("{q_steps} q in [1.01, 1.99]");
    outcome
}

/// Windows of the sifting matrix: straddling, touching from either side, away, whole line.
pub fn sifting_windows() -> Vec<Interval<f64>> {
    vec![
        Interval::new(-1.0, 1.0).unwrap(),
        Interval::new(0.0, 1.0).unwrap(),
        Interval::new(-1.0, 0.0).unwrap(),
        Interval::new(2.0, 3.0).unwrap(),
        Interval::real_line(),
    ]
}

pub fn sifting_functions() -> Vec<TestFunction> {
    vec![TestFunction::gaussian(), TestFunction::lorentzian(), TestFunction::constant(), TestFunction::monomial(2)]
}

/// Deviation from the expected sifting value at the top of the default ladder, and
/// non-increasing deviations along it. A case fails on either count, or when the
/// functional does not exist.
pub fn check_sifting(qs: &[f64]) -> CheckOutcome {
    let ladder = LambdaLadder::default();
    let mut cases = Vec::new();
    for &q in qs {
        for f in sifting_functions() {
            for w in sifting_windows() {
                cases.push((q, f.clone(), w));
            }
        }
    }
    let results: Vec<_> = cases
        .par_iter()
        .map(|(q, f, w)| {
            let case = format!("q={q} f={} window=({},{})", f.name(), w.lower(), w.upper());
            match QParam::delta(*q).and_then(|qp| sifting_scan(qp, f, *w, &ladder, SIFTING_QUAD_TOL)) {
                Ok(report) => {
                    let mut r = row("sifting", case, report.final_deviation, SIFTING_TOL);
                    if !report.monotone_convergence {
                        r.passed = false;
                        r.case.push_str(" non-monotone");
                    }
                    (r, !report.all_converged())
                }
                Err(e) => {
                    let mut r = error_row("sifting", case, SIFTING_TOL);
                    r.case.push_str(&format!(" error: {e}"));
                    (r, false)
                }
            }
        })
        .collect();
    let exhausted = results.iter().any(|(_, e)| *e);
    let mut outcome =
        CheckOutcome::from_rows("sifting", SIFTING_TOL, results.into_iter().map(|(r, _)| r).collect());
    outcome.budget_exhausted = exhausted;
    outcome.note = format!("Λ ladder 1e2..1e6, q in {qs:?}");
    outcome
}

/// Taylor-term integrals at `q = 1.4` on `(-1, 1)`: even `|J_k|` strictly decreasing in
/// `k = 2..10` and in `Λ`, odd `|J_k|` below [`JK_ODD_TOL`].
pub fn check_jk() -> CheckOutcome {
    const K_MAX: u32 = 10;
    let lambdas = [1e1, 1e10, 1e20];
    let window = Interval::new(-1.0, 1.0).unwrap();
    let table = match QParam::delta(1.4).and_then(|q| jk_table(q, &lambdas, K_MAX, window)) {
        Ok(t) => t,
        Err(e) => {
            let mut outcome =
                CheckOutcome::from_rows("jk_decay", JK_ODD_TOL, vec![error_row("jk_decay", e.to_string(), JK_ODD_TOL)]);
            outcome.note = "table failed".into();
            return outcome;
        }
    };
    let value = |li: usize, k: u32| table[li * (K_MAX as usize + 1) + k as usize].value.abs();
    let ordered = |larger: f64, smaller: f64| if smaller < larger { 0.0 } else { smaller / larger };
    let mut rows = Vec::new();
    for (li, lambda) in lambdas.iter().enumerate() {
        for k in (3..=K_MAX).step_by(2) {
            rows.push(row("jk_decay", format!("odd Λ={lambda:e} k={k}"), value(li, k), JK_ODD_TOL));
        }
        for k in (4..=K_MAX).step_by(2) {
            let d = ordered(value(li, k - 2), value(li, k));
            rows.push(DetailRow {
                check: "jk_decay",
                case: format!("k-order Λ={lambda:e} |J_{}| > |J_{k}|", k - 2),
                deviation: d,
                tolerance: JK_ODD_TOL,
                passed: d == 0.0,
            });
        }
        if li > 0 {
            for k in (2..=K_MAX).step_by(2) {
                let d = ordered(value(li - 1, k), value(li, k));
                rows.push(DetailRow {
                    check: "jk_decay",
                    case: format!("Λ-order k={k} Λ={:e} -> {lambda:e}", lambdas[li - 1]),
                    deviation: d,
                    tolerance: JK_ODD_TOL,
                    passed: d == 0.0,
                });
            }
        }
    }
    let mut outcome = CheckOutcome::from_rows("jk_decay", JK_ODD_TOL, rows);
    outcome.budget_exhausted = table.iter().any(|r| !r.converged);
    outcome.note = "q=1.4, window (-1,1), Λ in {1e1,1e10,1e20}, orderings over even k".into();
    outcome
}

/// `sin(mθ)` against its binomial expansion on random `m <= 20`, `θ` in `[-π, π]`.
pub fn check_trig_identity(samples: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..samples)
        .map(|_| {
            let m = rng.gen_range(1..=20u32);
            let theta = rng.gen_range(-PI..=PI);
            let (lhs, rhs) = trig_identity_check(m, theta);
            row("trig_identity", format!("m={m} θ={theta:.17}"), (lhs - rhs).abs(), TRIG_IDENTITY_TOL)
        })
        .collect();
    let mut outcome = CheckOutcome::from_rows("trig_identity", TRIG_IDENTITY_TOL, rows);
    outcome.note = format!("{samples} samples, seed {seed}");
    outcome
}

/// Quadrature against closed-form normalization of q-plane waves, the `q = 2` anchor,
/// and growth of the truncated norm at `q = 1`.
pub fn check_wave_norm() -> CheckOutcome {
    let qs: Vec<f64> = (0..10).map(|i| 1.1 + 0.2 * f64::from(i)).collect();
    let xis = [0.5, 1.0, 2.0];
    let cases: Vec<(f64, f64)> = qs.iter().flat_map(|&q| xis.iter().map(move |&xi| (q, xi))).collect();
    let results: Vec<_> = cases
        .par_iter()
        .map(|&(q, xi)| {
            let case = format!("q={q:.1} xi={xi}");
            match QParam::wave(q).and_then(|qp| {
                let closed = wave_norm_closed(qp, xi)?;
                // relative error of N is half that of the integral 1/N^2
                wave_norm_check(qp, xi, WAVE_NORM_REL_TOL / (closed * closed) / 10.0)
            }) {
                Ok(w) => (row("wave_norm", case, w.rel_deviation(), WAVE_NORM_REL_TOL), !w.integral.converged),
                Err(e) => (error_row("wave_norm", format!("{case} error: {e}"), WAVE_NORM_REL_TOL), false),
            }
        })
        .collect();
    let mut exhausted = results.iter().any(|(_, e)| *e);
    let mut rows: Vec<DetailRow> = results.into_iter().map(|(r, _)| r).collect();

    let anchor = QParam::wave(2.0).and_then(|qp| Ok((wave_norm_closed(qp, 1.0)?, wave_norm_check(qp, 1.0, 1e-12)?)));
    match anchor {
        Ok((closed, numeric)) => {
            let target = PI.sqrt().recip();
            rows.push(row("wave_norm", "anchor q=2 xi=1 closed".into(), (closed - target).abs(), WAVE_ANCHOR_TOL));
            rows.push(row(
                "wave_norm",
                "anchor q=2 xi=1 numeric".into(),
                (numeric.n_numeric - target).abs(),
                WAVE_ANCHOR_TOL,
            ));
            exhausted |= !numeric.integral.converged;
        }
        Err(e) => rows.push(error_row("wave_norm", format!("anchor error: {e}"), WAVE_ANCHOR_TOL)),
    }

    let growth = QParam::delta(1.0).and_then(|q1| {
        let short = truncated_norm_integral(q1, 1.0, 1e2, 1e-8)?;
        let long = truncated_norm_integral(q1, 1.0, 1e4, 1e-8)?;
        Ok(long.value / short.value)
    });
    rows.push(match growth {
        Ok(factor) => DetailRow {
            check: "wave_norm",
            case: format!("q=1 truncated norm growth X=1e2 -> 1e4: factor {factor:.3}"),
            deviation: 0.0,
            tolerance: WAVE_NORM_REL_TOL,
            passed: factor >= WAVE_DIVERGENCE_FACTOR,
        },
        Err(e) => error_row("wave_norm", format!("q=1 growth error: {e}"), WAVE_NORM_REL_TOL),
    });

    let mut outcome = CheckOutcome::from_rows("wave_norm", WAVE_NORM_REL_TOL, rows);
    outcome.budget_exhausted = exhausted;
    outcome.note = "q in {1.1..2.9 step 0.2} x xi in {0.5,1,2}, q=2 anchor, q=1 divergence".into();
    outcome
}

/// `q_cos^2 + q_sin^2 = |e_q(ix)|^2` within [`PYTHAGOREAN_ULPS`] on random `(q, x)`, and
/// `e_q(ix) -> e^{ix}` as `q -> 1`, monotonically over `q - 1` in `{1e-2, 1e-4, 1e-6}`.
pub fn check_core_identities(samples: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(2);

    let mut worst_ulps = 0.0f64;
    let mut worst_case = String::new();
    for _ in 0..samples {
        let q = rng.gen_range(1.001..2.999);
        let magnitude = 10f64.powf(rng.gen_range(-3.0..3.0));
        let x = if rng.gen::<bool>() { magnitude } else { -magnitude };
        let qp = QParam::wave(q).unwrap();
        let (c, s) = (q_cos(qp, x), q_sin(qp, x));
        let m = q_modulus_sq(qp, x);
        let ulps = (c * c + s * s - m).abs() / (m * f64::EPSILON);
        if ulps > worst_ulps {
            worst_ulps = ulps;
            worst_case = format!("q={q:.17} x={x:.17e}");
        }
    }
    rows.push(DetailRow {
        check: "core_identities",
        case: format!("pythagorean worst (ulps) at {worst_case}"),
        deviation: worst_ulps,
        tolerance: PYTHAGOREAN_ULPS,
        passed: worst_ulps <= PYTHAGOREAN_ULPS,
    });

    let steps = [1e-2, 1e-4, 1e-6];
    let mut worst_final = 0.0f64;
    let mut monotone = true;
    for _ in 0..samples {
        let x = rng.gen_range(-10.0..=10.0);
        let (s, c) = f64::sin_cos(x);
        let diffs: Vec<f64> = steps
            .iter()
            .map(|&d| {
                let z = q_exp_imag(QParam::delta(1.0 + d).unwrap(), x);
                (z.re - c).hypot(z.im - s)
            })
            .collect();
        monotone &= diffs.windows(2).all(|w| w[1] <= w[0]);
        worst_final = worst_final.max(diffs[2]);
    }
    rows.push(DetailRow {
        check: "core_identities",
        case: format!("q->1 continuity at q=1+1e-6, |x|<=10{}", if monotone { "" } else { " non-monotone" }),
        deviation: worst_final,
        tolerance: CONTINUITY_TOL,
        passed: monotone && worst_final < CONTINUITY_TOL,
    });

    let mut outcome = CheckOutcome::from_rows("core_identities", PYTHAGOREAN_ULPS, rows);
    outcome.worst = worst_ulps;
    outcome.note = format!("{samples} samples each, seed {seed}");
    outcome
}

/// Every check at the sizes set by `profile`, in a fixed order.
pub fn run_all(profile: Profile, seed: u64) -> Vec<CheckOutcome> {
    vec![
        check_exact_pi(profile.pi_sum_n_max()),
        check_pi_integral(profile.r_steps()),
        check_c_of_q(profile.q_steps()),
        check_sifting(&profile.sifting_qs()),
        check_jk(),
        check_trig_identity(1_000, seed),
        check_wave_norm(),
        check_core_identities(profile.random_samples(), seed.wrapping_add(1)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(linspace(1.0, 2.0, 3), vec![1.0, 1.5, 2.0]);
        let g = logspace(0.05, 20.0, 40);
        assert_eq!(g.len(), 40);
        assert!((g[0] - 0.05).abs() < 1e-15 && (g[39] - 20.0).abs() < 1e-12);
        assert!(linspace(0.0, 1.0, 0).is_empty());
    }

    #[test]
    fn small_checks_pass() {
        assert!(check_exact_pi(30).passed);
        assert!(check_trig_identity(200, 7).passed);
        assert!(check_core_identities(500, 7).passed);
    }

    #[test]
    fn outcome_line() {
        let outcome = CheckOutcome::from_rows("demo", 1.0, vec![row("demo", "a".into(), 0.5, 1.0)]);
        assert!(outcome.passed);
        assert!(outcome.to_string().starts_with("PASS demo"));
        let failed = CheckOutcome::from_rows("demo", 1.0, vec![row("demo", "a".into(), 2.0, 1.0)]);
        assert!(failed.to_string().starts_with("FAIL"));
    }
}
