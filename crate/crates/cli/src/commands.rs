use std::fmt;
use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use qdelta::delta::{jk_table, sifting_scan, wave_norm_check, LambdaLadder, TestFunction};
use qdelta::exactpi::{pi_sum_ratio_with, GammaTable};
use qdelta::qexp::{nascent_delta, q_cos, q_modulus_sq, q_sin, NascentDeltaSpec, QParam};
use qdelta::quadrature::{self, c_of_q_closed, c_of_q_numeric, Interval, RParam};
use qdelta::verify::{linspace, logspace, run_all, Profile};

use crate::output::RowSink;
use crate::OutputArgs;

#[derive(Debug)]
pub enum Failure {
    Usage(anyhow::Error),
    Verification(String),
    Budget(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(e) => write!(f, "{e:#}"),
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
            Failure::Budget(m) => write!(f, "evaluation budget exhausted: {m}"),
        }
    }
}

impl From<qdelta::Error> for Failure {
    fn from(e: qdelta::Error) -> Self {
        Failure::Usage(e.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

pub type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(anyhow::anyhow!(msg.into()))
}

fn check_tol(tol: f64) -> Outcome {
    if !(1e-13..=1e-4).contains(&tol) {
        return Err(usage(format!("--tol must lie in [1e-13, 1e-4], got {tol:e}")));
    }
    Ok(())
}

fn check_range(name: &str, lo: f64, hi: f64, steps: usize) -> Outcome {
    if steps == 0 || !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(usage(format!("empty {name} range [{lo}, {hi}] with {steps} steps")));
    }
    Ok(())
}

fn parse_window(text: &str) -> Result<Interval<f64>, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b] = parts.as_slice() else {
        return Err(usage(format!("--window expects a,b; got {text:?}")));
    };
    let parse = |s: &str| s.parse::<f64>().map_err(|_| usage(format!("bad window bound {s:?}")));
    Ok(Interval::new(parse(a)?, parse(b)?)?)
}

fn format_window(w: Interval<f64>) -> String {
    format!("{},{}", w.lower(), w.upper())
}

fn budget_check(unconverged: Vec<String>) -> Outcome {
    if unconverged.is_empty() {
        Ok(())
    } else {
        Err(Failure::Budget(unconverged.join("; ")))
    }
}

#[derive(Serialize)]
struct PiSumRow {
    n: u64,
    ratio_num: String,
    ratio_den: String,
    ok: bool,
}

pub fn pi_sum(n_min: u64, n_max: u64, output: &OutputArgs) -> Outcome {
    if n_min < 1 || n_min > n_max {
        return Err(usage(format!("need 1 <= n-min <= n-max, got {n_min}..{n_max}")));
    }
    let table = GammaTable::for_n_max(n_max);
    let mut sink = RowSink::open(output.format, output.out.as_deref())?;
    let mut mismatches = Vec::new();
    let ns: Vec<u64> = (n_min..=n_max).collect();
    for chunk in ns.chunks(64) {
        let rows: Vec<PiSumRow> = chunk
            .par_iter()
            .map(|&n| {
                let ratio = pi_sum_ratio_with(&table, n);
                PiSumRow {
                    n,
                    ratio_num: ratio.numer().to_string(),
                    ratio_den: ratio.denom().to_string(),
                    ok: ratio.numer() == ratio.denom(),
                }
            })
            .collect();
        for row in &rows {
            sink.write(row)?;
            if !row.ok {
                mismatches.push(row.n);
            }
        }
    }
    sink.finish()?;
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("S_n / π != 1 for n in {mismatches:?}")))
    }
}

#[derive(Serialize)]
struct PiIntegralRow {
    r: f64,
    value: f64,
    abs_err: f64,
    abs_dev: f64,
}

pub fn pi_integral(r_min: f64, r_max: f64, r_steps: usize, tol: f64, output: &OutputArgs) -> Outcome {
    check_tol(tol)?;
    check_range("r", r_min, r_max, r_steps)?;
    if r_min <= 0.0 {
        return Err(usage("--r-min must be positive"));
    }
    let results = logspace(r_min, r_max, r_steps)
        .into_par_iter()
        .map(|r| quadrature::pi_integral(RParam::new(r)?, tol).map(|res| (r, res)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut sink = RowSink::open(output.format, output.out.as_deref())?;
    let mut unconverged = Vec::new();
    for (r, res) in results {
        sink.write(&PiIntegralRow { r, value: res.value, abs_err: res.abs_error_estimate, abs_dev: (res.value - PI).abs() })?;
        if !res.converged {
            unconverged.push(format!("r = {r}"));
        }
    }
    sink.finish()?;
    budget_check(unconverged)
}

#[derive(Serialize)]
struct CqRow {
    q: f64,
    c_numeric: f64,
    c_closed: f64,
    rel_dev: f64,
}

pub fn cq_scan(q_min: f64, q_max: f64, q_steps: usize, tol: f64, output: &OutputArgs) -> Outcome {
    check_tol(tol)?;
    check_range("q", q_min, q_max, q_steps)?;
    let results = linspace(q_min, q_max, q_steps)
        .into_par_iter()
        .map(|q| {
            let qp = QParam::delta(q)?;
            Ok((q, c_of_q_numeric(qp, tol)?, c_of_q_closed(qp)?))
        })
        .collect::<Result<Vec<_>, qdelta::Error>>()?;
    let mut sink = RowSink::open(output.format, output.out.as_deref())?;
    let mut unconverged = Vec::new();
    for (q, numeric, closed) in results {
        sink.write(&CqRow { q, c_numeric: numeric.value, c_closed: closed, rel_dev: (numeric.value - closed).abs() / closed })?;
        if !numeric.converged {
            unconverged.push(format!("q = {q}"));
        }
    }
    sink.finish()?;
    budget_check(unconverged)
}

#[derive(Serialize)]
struct DeltaRow {
    lambda: f64,
    x: f64,
    delta: f64,
}

pub fn delta_profile(
    q: f64,
    lambdas: &[f64],
    x_min: f64,
    x_max: f64,
    x_steps: usize,
    output: &OutputArgs,
) -> Outcome {
    check_range("x", x_min, x_max, x_steps)?;
    let mut sorted = lambdas.to_vec();
    sorted.sort_by(f64::total_cmp);
    let specs = sorted
        .iter()
        .map(|&lambda| NascentDeltaSpec::new(q, lambda))
        .collect::<Result<Vec<_>, _>>()?;
    let mut sink = RowSink::open(output.format, output.out.as_deref())?;
    let xs = linspace(x_min, x_max, x_steps);
    for spec in specs {
        for &x in &xs {
            sink.write(&DeltaRow { lambda: spec.lambda(), x, delta: nascent_delta(spec, x) })?;
        }
    }
    sink.finish()?;
    Ok(())
}

#[derive(Serialize)]
struct JkOutRow {
    lambda: f64,
    k: u32,
    value: f64,
    abs_err: f64,
}

pub fn jk(q: f64, lambdas: &[f64], k_max: u32, window: &str, output: &OutputArgs) -> Outcome {
    let window = parse_window(window)?;
    let mut sorted = lambdas.to_vec();
    sorted.sort_by(f64::total_cmp);
    let rows = jk_table(QParam::delta(q)?, &sorted, k_max, window)?;
    let mut sink = RowSink::open(output.format, output.out.as_deref())?;
    let mut unconverged = Vec::new();
    for r in rows {
        sink.write(&JkOutRow { lambda: r.lambda, k: r.k, value: r.value, abs_err: r.abs_error })?;
        if !r.converged {
            unconverged.push(format!("Λ = {}, k = {}", r.lambda, r.k));
        }
    }
    sink.finish()?;
    budget_check(unconverged)
}

#[derive(Serialize)]
struct QtrigRow {
    q: f64,
    x: f64,
    q_cos: f64,
    q_sin: f64,
    cos: f64,
    sin: f64,
    modulus_sq: f64,
}

pub fn qtrig(q: f64, x_min: f64, x_max: f64, x_steps: usize, output: &OutputArgs) -> Outcome {
    check_range("x", x_min, x_max, x_steps)?;
    let qp = QParam::wave(q).or_else(|_| QParam::delta(q))?;
    let mut sink = RowSink::open(output.format, output.out.as_deref())?;
    for x in linspace(x_min, x_max, x_steps) {
        sink.write(&QtrigRow {
            q,
            x,
            q_cos: q_cos(qp, x),
            q_sin: q_sin(qp, x),
            cos: x.cos(),
            sin: x.sin(),
            modulus_sq: q_modulus_sq(qp, x),
        })?;
    }
    sink.finish()?;
    Ok(())
}

#[derive(Serialize)]
struct NormRow {
    q: f64,
    xi: f64,
    n_closed: f64,
    n_numeric: f64,
    rel_dev: f64,
}

pub fn norm(q_min: f64, q_max: f64, q_steps: usize, xi: f64, tol: f64, output: &OutputArgs) -> Outcome {
    check_tol(tol)?;
    check_range("q", q_min, q_max, q_steps)?;
    let results = linspace(q_min, q_max, q_steps)
        .into_par_iter()
        .map(|q| wave_norm_check(QParam::wave(q)?, xi, tol))
        .collect::<Result<Vec<_>, _>>()?;
    let mut sink = RowSink::open(output.format, output.out.as_deref())?;
    let mut unconverged = Vec::new();
    for w in results {
        sink.write(&NormRow { q: w.q, xi: w.xi, n_closed: w.n_closed, n_numeric: w.n_numeric, rel_dev: w.rel_deviation() })?;
        if !w.integral.converged {
            unconverged.push(format!("q = {}", w.q));
        }
    }
    sink.finish()?;
    budget_check(unconverged)
}

#[derive(Serialize)]
struct SiftingRow {
    q: f64,
    function: String,
    window: String,
    lambda: f64,
    value: f64,
    abs_err: f64,
    expected: f64,
    deviation: f64,
}

pub fn sifting(q: f64, function: &str, window: &str, lambdas: &[f64], tol: f64, output: &OutputArgs) -> Outcome {
    check_tol(tol)?;
    let f = TestFunction::by_name(function).ok_or_else(|| usage(format!("unknown test function {function:?}")))?;
    let window = parse_window(window)?;
    let mut sorted = lambdas.to_vec();
    sorted.sort_by(f64::total_cmp);
    let ladder = LambdaLadder::new(sorted)?;
    let report = sifting_scan(QParam::delta(q)?, &f, window, &ladder, tol)?;
    let mut sink = RowSink::open(output.format, output.out.as_deref())?;
    for p in &report.points {
        sink.write(&SiftingRow {
            q,
            function: report.function.clone(),
            window: format_window(window),
            lambda: p.lambda,
            value: p.value,
            abs_err: p.abs_error,
            expected: report.expected,
            deviation: (p.value - report.expected).abs(),
        })?;
    }
    sink.finish()?;
    if !report.all_converged() {
        return Err(Failure::Budget(format!("sifting functional of {function} at q = {q}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct DetailOutRow<'a> {
    check: &'a str,
    case: &'a str,
    deviation: f64,
    tolerance: f64,
    passed: bool,
}

pub fn verify(profile: Profile, seed: u64, output: &OutputArgs) -> Outcome {
    let outcomes = run_all(profile, seed);
    for o in &outcomes {
        println!("{o}");
    }
    if let Some(path) = &output.out {
        let mut sink = RowSink::open(output.format, Some(path))?;
        for o in &outcomes {
            for r in &o.rows {
                sink.write(&DetailOutRow {
                    check: r.check,
                    case: &r.case,
                    deviation: r.deviation,
                    tolerance: r.tolerance,
                    passed: r.passed,
                })?;
            }
        }
        sink.finish()?;
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).collect();
    let passed = outcomes.len() - failed.len();
    println!("{passed} of {} checks passed", outcomes.len());
    if failed.is_empty() {
        return Ok(());
    }
    let names = failed.iter().map(|o| o.name).collect::<Vec<_>>().join(", ");
    if failed.iter().all(|o| o.budget_exhausted) {
        Err(Failure::Budget(names))
    } else {
        Err(Failure::Verification(names))
    }
}
