//! Integer factorization utilities: deterministic 64-bit primality,
//! Pollard-rho factoring, divisor enumeration, and the classical
//! arithmetic functions Ω, ω, τ, μ.

use crate::error::{Error, Result};

/// Canonical prime factorization `n = p_1^{e_1} ... p_r^{e_r}` with the
/// primes in ascending order. `n = 1` is the empty product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    fn from_sorted(factors: Vec<(u64, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|&(_, e)| e >= 1));
        PrimeFactorization { factors }
    }

    /// `(prime, exponent)` pairs, ascending by prime.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Reconstructs n.
    pub fn value(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }

    /// Ω(n), prime factors counted with multiplicity.
    pub fn big_omega(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// ω(n), distinct prime factors.
    pub fn small_omega(&self) -> u32 {
        self.factors.len() as u32
    }

    /// τ(n), number of divisors.
    pub fn tau(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(_, e)| acc * (e as u64 + 1))
    }

    /// μ(n): 0 if n has a squared prime factor, else (-1)^{ω(n)}.
    pub fn mobius(&self) -> i32 {
        if self.factors.iter().any(|&(_, e)| e >= 2) {
            0
        } else if self.factors.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All divisors of n, sorted ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pe = 1u64;
            for _ in 0..e {
                pe *= p;
                for i in 0..len {
                    divs.push(divs[i] * pe);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full 64-bit range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let r = d.trailing_zeros();
    let d = d >> r;
    // This base set is deterministic for all n < 3.3 * 10^24.
    'witness: for &a in &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Pollard's rho (Brent variant). `n` must be composite, odd, > 3.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

const TRIAL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97,
];

/// Factorizes any positive 64-bit integer. `factorize(1)` is the empty
/// product.
pub fn factorize(n: u64) -> PrimeFactorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut rest = n;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in TRIAL_PRIMES {
        if rest.is_multiple_of(p) {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        if p * p > rest {
            break;
        }
    }
    let mut stack = Vec::new();
    if rest > 1 {
        // No factor below 100 remains, so anything under 101² is prime.
        if rest < 101 * 101 {
            factors.push((rest, 1));
        } else {
            stack.push(rest);
        }
    }
    let mut extra: Vec<u64> = Vec::new();
    while let Some(m) = stack.pop() {
        if is_prime(m) {
            extra.push(m);
        } else {
            let d = pollard_rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    extra.sort_unstable();
    let mut i = 0;
    while i < extra.len() {
        let p = extra[i];
        let mut e = 0u32;
        while i < extra.len() && extra[i] == p {
            e += 1;
            i += 1;
        }
        factors.push((p, e));
    }
    factors.sort_unstable_by_key(|&(p, _)| p);
    PrimeFactorization::from_sorted(factors)
}

/// Ω(n): prime factors counted with multiplicity; Ω(1) = 0.
pub fn big_omega(n: u64) -> u32 {
    factorize(n).big_omega()
}

/// ω(n): distinct prime factors; ω(1) = 0.
pub fn small_omega(n: u64) -> u32 {
    factorize(n).small_omega()
}

/// τ(n): number of divisors; τ(1) = 1.
pub fn tau(n: u64) -> u64 {
    factorize(n).tau()
}

/// Möbius function μ(n).
pub fn mobius(n: u64) -> i32 {
    factorize(n).mobius()
}

/// Sorted divisors of n.
pub fn divisors(n: u64) -> Vec<u64> {
    factorize(n).divisors()
}

/// Smallest-prime-factor sieve for amortized factorization over a range.
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    /// Sieves smallest prime factors for 2..=limit.
    pub fn new(limit: u64) -> Self {
        let limit = limit as usize;
        let mut spf = vec![0u32; limit + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            for &p in &primes {
                let p = p as usize;
                if p > spf[i] as usize || i * p > limit {
                    break;
                }
                spf[i * p] = p as u32;
            }
        }
        SpfSieve { spf }
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Factorizes n <= limit via the sieve.
    pub fn factorize(&self, n: u64) -> PrimeFactorization {
        assert!(n >= 1 && n <= self.limit(), "n out of sieve range");
        let mut rest = n as usize;
        let mut factors = Vec::new();
        while rest > 1 {
            let p = self.spf[rest] as usize;
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p as u64, e));
        }
        factors.sort_unstable_by_key(|&(p, _)| p);
        PrimeFactorization::from_sorted(factors)
    }

    pub fn divisors(&self, n: u64) -> Vec<u64> {
        self.factorize(n).divisors()
    }
}

/// Checked p^k for u64, erroring instead of wrapping.
pub fn checked_prime_power(p: u64, k: u32) -> Result<u64> {
    p.checked_pow(k)
        .ok_or(Error::PrimePowerTooLarge { p, k: k as u64 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(1).factors(), &[]);
        assert_eq!(factorize(12).factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(9999991).factors(), &[(9999991, 1)]);
        assert!(is_prime(9999991));
    }

    #[test]
    fn factorize_large_semiprime() {
        // 1000003 * 1000033
        let n = 1000003u64 * 1000033;
        assert_eq!(factorize(n).factors(), &[(1000003, 1), (1000033, 1)]);
    }

    #[test]
    fn classical_functions() {
        assert_eq!(
            (big_omega(12), small_omega(12), tau(12), mobius(12)),
            (3, 2, 6, 0)
        );
        assert_eq!(
            (big_omega(30), small_omega(30), tau(30), mobius(30)),
            (3, 3, 8, -1)
        );
        let n = 1u64 << 40;
        assert_eq!(
            (big_omega(n), small_omega(n), tau(n), mobius(n)),
            (40, 1, 41, 0)
        );
        assert_eq!((big_omega(1), small_omega(1), tau(1), mobius(1)), (0, 0, 1, 1));
    }

    #[test]
    fn divisors_sorted_and_complete() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn sieve_matches_direct() {
        let sieve = SpfSieve::new(5000);
        for n in 1..=5000u64 {
            assert_eq!(sieve.factorize(n), factorize(n), "n = {n}");
        }
    }

    #[test]
    fn mobius_first_values() {
        let mu: Vec<i32> = (1..=10).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }
}
