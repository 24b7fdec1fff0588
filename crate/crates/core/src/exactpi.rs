//! Exact evaluation of the Gamma-ratio sums
//!
//! ```text
//! S_n = n Σ_{k=0}^{⌊(n+1)/2⌋-1} (-1)^k Γ(n-k-1/2) Γ(k+1/2) / (Γ(2k+2) Γ(n-2k))
//! ```
//!
//! Every `Γ(m + 1/2)` equals `√π` times the rational `(2m)! / (4^m m!) = (2m-1)!! / 2^m`,
//! so each term carries exactly one factor of π and `S_n / π` is rational. The integer
//! Gammas are factorials. Collecting the denominators,
//!
//! ```text
//! S_n / π = Σ_k (-1)^k C(n, 2k+1) (2(n-1-k)-1)!! (2k-1)!!  /  (2^{n-1} (n-1)!)
//! ```
//!
//! which is summed in big integers and reduced once. `S_n = π` holds iff the ratio is `1/1`.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::scalar::Real;

/// Exact binomial coefficient; `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `Γ(m + 1/2) / √π = (2m)! / (4^m m!)`, in lowest terms `(2m-1)!! / 2^m`.
pub fn half_integer_gamma_ratio(m: u64) -> BigRational {
    let mut odd = BigUint::one();
    for j in 1..=m {
        odd *= 2 * j - 1;
    }
    BigRational::new_raw(BigInt::from(odd), BigInt::from(BigUint::one() << m))
}

/// Grow-only table of factorials and odd double factorials.
///
/// Filled by a single writer through [`GammaTable::extend_to`]; afterwards it is
/// only read and can be shared across threads.
#[derive(Debug, Clone)]
pub struct GammaTable {
    factorials: Vec<BigUint>,
    odd_double_factorials: Vec<BigUint>,
}

impl Default for GammaTable {
    fn default() -> Self {
        Self {
            factorials: vec![BigUint::one()],
            odd_double_factorials: vec![BigUint::one()],
        }
    }
}

impl GammaTable {
    /// Table sufficient for every `S_n` with `n <= n_max`.
    pub fn for_n_max(n_max: u64) -> Self {
        let mut table = Self::default();
        table.extend_to(n_max);
        table
    }

    /// Ensures `m!` and `(2m-1)!!` are stored for all `m <= m_max`.
    pub fn extend_to(&mut self, m_max: u64) {
        let m_max = m_max as usize;
        while self.factorials.len() <= m_max {
            let m = self.factorials.len() as u64;
            let next = self.factorials.last().unwrap() * m;
            self.factorials.push(next);
        }
        while self.odd_double_factorials.len() <= m_max {
            let m = self.odd_double_factorials.len() as u64;
            let next = self.odd_double_factorials.last().unwrap() * (2 * m - 1);
            self.odd_double_factorials.push(next);
        }
    }

    pub fn capacity(&self) -> u64 {
        (self.factorials.len().min(self.odd_double_factorials.len()) - 1) as u64
    }

    /// `m!`
    pub fn factorial(&self, m: u64) -> &BigUint {
        &self.factorials[m as usize]
    }

    /// `(2m-1)!!`, the numerator of `Γ(m + 1/2) / √π` in lowest terms.
    pub fn odd_double_factorial(&self, m: u64) -> &BigUint {
        &self.odd_double_factorials[m as usize]
    }

    /// Same value as [`half_integer_gamma_ratio`], served from the table.
    pub fn half_integer_gamma_ratio(&self, m: u64) -> BigRational {
        BigRational::new_raw(
            BigInt::from(self.odd_double_factorial(m).clone()),
            BigInt::from(BigUint::one() << m),
        )
    }
}

/// Number of terms in `S_n`: `⌊(n+1)/2⌋`.
pub fn term_count(n: u64) -> u64 {
    n.div_ceil(2)
}

/// `S_n / π` using a table that covers `n`.
///
/// # Panics
/// If `n == 0` or the table capacity is below `n`.
pub fn pi_sum_ratio_with(table: &GammaTable, n: u64) -> BigRational {
    assert!(n >= 1, "S_n is defined for n >= 1");
    assert!(table.capacity() >= n, "gamma table too small for n = {n}");

    let mut sum = BigInt::zero();
    // C(n, j) walked upward; only odd j = 2k + 1 contribute.
    let mut binom = BigUint::one();
    let mut j = 0u64;
    for k in 0..term_count(n) {
        while j < 2 * k + 1 {
            binom *= n - j;
            binom /= j + 1;
            j += 1;
        }
        let product = &binom
            * table.odd_double_factorial(k)
            * table.odd_double_factorial(n - 1 - k);
        if k % 2 == 0 {
            sum += BigInt::from(product);
        } else {
            sum -= BigInt::from(product);
        }
    }
    let denominator = BigInt::from(table.factorial(n - 1) << (n - 1) as usize);
    BigRational::new(sum, denominator)
}

/// `S_n / π` computed exactly. Equals `1/1` iff `S_n = π`.
pub fn pi_sum_ratio(n: u64) -> BigRational {
    pi_sum_ratio_with(&GammaTable::for_n_max(n), n)
}

/// One evaluated member of the sum family.
#[derive(Debug, Clone)]
pub struct PiSumReport {
    pub n: u64,
    /// `S_n / π`, reduced.
    pub ratio: BigRational,
    pub term_count: u64,
    pub elapsed: Duration,
}

impl PiSumReport {
    pub fn is_pi(&self) -> bool {
        self.ratio.is_one()
    }
}

pub fn pi_sum_report(table: &GammaTable, n: u64) -> PiSumReport {
    let start = Instant::now();
    let ratio = pi_sum_ratio_with(table, n);
    PiSumReport { n, ratio, term_count: term_count(n), elapsed: start.elapsed() }
}

/// Evaluates `S_n / π` for every `n` in `n_min..=n_max`, in parallel, ordered by `n`.
pub fn pi_sum_scan(n_min: u64, n_max: u64) -> Vec<PiSumReport> {
    assert!(n_min >= 1 && n_min <= n_max);
    let table = GammaTable::for_n_max(n_max);
    // Largest n first so the expensive sums start early.
    let mut reports: Vec<PiSumReport> = (n_min..=n_max)
        .rev()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| pi_sum_report(&table, n))
        .collect();
    reports.reverse();
    reports
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy)]
struct DoubleDouble<F> {
    hi: F,
    lo: F,
}

impl<F: Real> DoubleDouble<F> {
    fn from(x: F) -> Self {
        Self { hi: x, lo: F::zero() }
    }

    fn renormalize(hi: F, lo: F) -> Self {
        let s = hi + lo;
        Self { hi: s, lo: lo - (s - hi) }
    }

    fn add(self, other: Self) -> Self {
        let s = self.hi + other.hi;
        let bb = s - self.hi;
        let err = (self.hi - (s - bb)) + (other.hi - bb);
        Self::renormalize(s, err + self.lo + other.lo)
    }

    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }

    fn mul(self, other: Self) -> Self {
        let p = self.hi * other.hi;
        let e = self.hi.mul_add(other.hi, -p);
        Self::renormalize(p, e + self.hi * other.lo + self.lo * other.hi)
    }
}

/// Both sides of `sin(mθ) = Σ_k (-1)^k C(m, 2k+1) cos^{m-2k-1}θ sin^{2k+1}θ`.
///
/// Returns `(lhs, rhs)`. The right side is accumulated in double-double arithmetic, so the
/// cancellation between terms of size up to `2^{m/2}` stays below the result's last bit.
/// Binomials convert to floats exactly up to `m = 55`.
pub fn trig_identity_check<F: Real>(m: u32, theta: F) -> (F, F) {
    assert!(m >= 1);
    let lhs = (F::from_u32(m).unwrap() * theta).sin();
    let (s, c) = theta.sin_cos();
    let m64 = u64::from(m);
    let powers = |base: F| {
        let mut out = vec![DoubleDouble::from(F::one())];
        for j in 0..m as usize {
            out.push(out[j].mul(DoubleDouble::from(base)));
        }
        out
    };
    let (cos_pow, sin_pow) = (powers(c), powers(s));
    let mut rhs = DoubleDouble::from(F::zero());
    for k in 0..term_count(m64) {
        let coeff = DoubleDouble::from(F::lit(binomial(m64, 2 * k + 1).to_f64().unwrap_or(f64::INFINITY)));
        let term = coeff.mul(cos_pow[(m64 - 2 * k - 1) as usize]).mul(sin_pow[(2 * k + 1) as usize]);
        rhs = rhs.add(if k % 2 == 0 { term } else { term.neg() });
    }
    (lhs, rhs.hi + rhs.lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(2, 1), BigUint::from(2u32));
        assert_eq!(binomial(7, 0), BigUint::one());
        assert_eq!(binomial(7, 7), BigUint::one());
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 4), BigUint::zero());
    }

    #[test]
    fn half_integer_values() {
        assert_eq!(half_integer_gamma_ratio(0), rat(1, 1));
        assert_eq!(half_integer_gamma_ratio(1), rat(1, 2));
        assert_eq!(half_integer_gamma_ratio(3), rat(15, 8));
        // Γ(3.5)/√π = 15/8 in floating point too
        let g35 = 15.0 / 8.0 * PI.sqrt();
        assert!((statrs::function::gamma::gamma(3.5) - g35).abs() < 1e-13);
    }

    #[test]
    fn half_integer_functional_equation() {
        let table = GammaTable::for_n_max(60);
        for m in 0..60 {
            let step = table.half_integer_gamma_ratio(m + 1) / table.half_integer_gamma_ratio(m);
            assert_eq!(step, rat(2 * m as i64 + 1, 2));
            assert_eq!(table.half_integer_gamma_ratio(m), half_integer_gamma_ratio(m));
        }
    }

    #[test]
    fn first_members_equal_pi() {
        for n in 1..=4 {
            assert!(pi_sum_ratio(n).is_one(), "n = {n}");
        }
    }

    #[test]
    fn report_fields() {
        let table = GammaTable::for_n_max(9);
        let report = pi_sum_report(&table, 9);
        assert_eq!(report.term_count, 5);
        assert!(report.is_pi());
    }

    #[test]
    fn scan_is_ordered() {
        let reports = pi_sum_scan(3, 40);
        assert_eq!(reports.len(), 38);
        assert!(reports.iter().zip(3..).all(|(r, n)| r.n == n && r.is_pi()));
    }

    #[test]
    fn identity_small_m() {
        let theta = 0.37f64;
        let (lhs, rhs) = trig_identity_check(2, theta);
        assert!((rhs - 2.0 * theta.cos() * theta.sin()).abs() < 1e-16);
        assert!((lhs - rhs).abs() < 1e-15);
        let (lhs, rhs) = trig_identity_check(1, theta);
        assert_eq!(rhs, theta.sin());
        assert_eq!(lhs, theta.sin());
        let (lhs, rhs) = trig_identity_check(3, PI / 6.0);
        assert!((lhs - 1.0).abs() < 1e-15 && (rhs - 1.0).abs() < 1e-15);
    }

    #[test]
    fn identity_up_to_fifty() {
        let mut worst = 0.0f64;
        for m in 1..=50 {
            for i in 0..40 {
                let theta = -PI + 2.0 * PI * (f64::from(i) + 0.37) / 40.0;
                let (lhs, rhs) = trig_identity_check(m, theta);
                worst = worst.max((lhs - rhs).abs());
            }
        }
        assert!(worst < 1e-10, "{worst:e}");
    }
}
