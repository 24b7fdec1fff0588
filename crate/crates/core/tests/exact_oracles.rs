use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use qdelta::exactpi::{binomial, half_integer_gamma_ratio, pi_sum_ratio, pi_sum_ratio_with, GammaTable};

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `Γ(m + 1/2) / √π` for `m = 0..len`, from `Γ(x + 1) = x Γ(x)` starting at 1.
fn gamma_half_recurrence(len: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::one()];
    for m in 1..len {
        let prev = out[m - 1].clone();
        out.push(prev * ratio(2 * m as i64 - 1, 2));
    }
    out
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// The sum term by term: `n Σ (-1)^k G(n-k-1) G(k) / ((2k+1)! (n-2k-1)!)`, with `G(m) = Γ(m+1/2)/√π`.
fn literal_sum(n: u64, g: &[BigRational]) -> BigRational {
    let mut sum = BigRational::zero();
    for k in 0..n.div_ceil(2) {
        let num = &g[(n - k - 1) as usize] * &g[k as usize];
        let den = BigRational::from_integer(factorial(2 * k + 1) * factorial(n - 2 * k - 1));
        let term = num / den;
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum * BigRational::from_integer(BigInt::from(n))
}

#[test]
fn literal_gamma_sum_agrees() {
    let g = gamma_half_recurrence(160);
    for n in 1..=150u64 {
        let literal = literal_sum(n, &g);
        assert!(literal.is_one(), "n = {n}: literal sum {literal}");
        assert_eq!(pi_sum_ratio(n), literal, "n = {n}");
    }
}

#[test]
fn half_integer_gamma_matches_recurrence() {
    let g = gamma_half_recurrence(300);
    for (m, expected) in g.iter().enumerate() {
        assert_eq!(&half_integer_gamma_ratio(m as u64), expected, "m = {m}");
    }
}

/// `C(n, k)` from Legendre's formula for the prime exponents of factorials.
fn binomial_by_primes(n: u64, k: u64) -> BigUint {
    let mut sieve = vec![true; n as usize + 1];
    let mut acc = BigUint::one();
    for p in 2..=n {
        if !sieve[p as usize] {
            continue;
        }
        let mut multiple = p * p;
        while multiple <= n {
            sieve[multiple as usize] = false;
            multiple += p;
        }
        let legendre = |m: u64| {
            let mut e = 0;
            let mut pk = p;
            while pk <= m {
                e += m / pk;
                pk = match pk.checked_mul(p) {
                    Some(v) => v,
                    None => break,
                };
            }
            e
        };
        let e = legendre(n) - legendre(k) - legendre(n - k);
        acc *= BigUint::from(p).pow(e as u32);
    }
    acc
}

#[test]
fn binomial_matches_pascal_rows() {
    let mut row = vec![BigUint::one()];
    for n in 1..=200u64 {
        let mut next = vec![BigUint::one(); n as usize + 1];
        for k in 1..n as usize {
            next[k] = &row[k - 1] + &row[k];
        }
        row = next;
        for k in 0..=n {
            assert_eq!(binomial(n, k), row[k as usize], "C({n},{k})");
        }
    }
}

#[test]
fn large_binomials_match_prime_factorisation() {
    for &(n, k) in &[(5000u64, 2500u64), (5000, 1), (4999, 1733), (3001, 1500)] {
        assert_eq!(binomial(n, k), binomial_by_primes(n, k), "C({n},{k})");
    }
}

#[test]
fn top_of_range_is_exactly_pi() {
    let table = GammaTable::for_n_max(5000);
    for n in [1999u64, 2000, 4096, 4999, 5000] {
        assert!(pi_sum_ratio_with(&table, n).is_one(), "n = {n}");
    }
}
