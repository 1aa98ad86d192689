//! Seed-fixed random function generators for verification sweeps.
//!
//! Every generator derives each value from (seed, site) alone, so repeated
//! evaluation is deterministic and order-independent. Coefficients are
//! uniform rationals in [0, 1] at the fixed denominator 2^16.

use num::{One, Zero};

use crate::arith::{rat, rat_frac, rat_pow_i64, rat_pow_u64, ArithmeticFunction, Rat};
use crate::primes::factorize;

/// Fixed denominator of random coefficients.
pub const RANDOM_DENOMINATOR: i64 = 1 << 16;

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Signed coefficient σ·r at site (a, b): σ = ±1 and r uniform over
/// {0, ..., 2^16}/2^16, derived from (seed, tag, site) alone so repeated
/// evaluation is deterministic and order-independent.
fn signed_coefficient(seed: u64, tag: u64, a: u64, b: u64) -> Rat {
    let bits = splitmix(splitmix(splitmix(seed ^ tag).wrapping_add(a)).wrapping_add(b));
    let r = rat_frac((bits % (RANDOM_DENOMINATOR as u64 + 1)) as i64, RANDOM_DENOMINATOR);
    if bits >> 63 == 0 {
        r
    } else {
        -r
    }
}

/// Largest exactly-representable rational at or below C n^γ. Integer γ is
/// exact; fractional γ goes through a downward-nudged binary64 value so the
/// result never exceeds the true envelope.
fn poly_envelope_lo(c: &Rat, gamma: &Rat, n: u64) -> Rat {
    if gamma.is_integer() {
        if let Ok(g) = i64::try_from(gamma.to_integer()) {
            return c * rat_pow_i64(&rat(n as i64), g);
        }
    }
    let g = rat_to_f64(gamma);
    let v = rat_to_f64(c) * (n as f64).powf(g) * (1.0 - 1e-9);
    if v <= 0.0 || !v.is_finite() {
        return Rat::zero();
    }
    Rat::from_float(v).unwrap_or_else(Rat::zero)
}

pub(crate) fn rat_to_f64(x: &Rat) -> f64 {
    use num::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

const TAG_BOUNDED: u64 = 0x01;
const TAG_POLY: u64 = 0x02;
const TAG_EXP: u64 = 0x03;
const TAG_MULT_POLY: u64 = 0x04;
const TAG_ZERO_HIGHER: u64 = 0x05;
const TAG_MULT_EXP: u64 = 0x06;
const TAG_TOTAL: u64 = 0x07;
const TAG_SUBMULT: u64 = 0x08;

/// Unconstrained random rational-valued f with |f(n)| <= 1.
pub fn bounded(seed: u64) -> ArithmeticFunction {
    ArithmeticFunction::new(format!("random-bounded(seed={seed})"), move |n| {
        if n == 1 {
            Rat::one()
        } else {
            signed_coefficient(seed, TAG_BOUNDED, n, 0)
        }
    })
    .expect("normalized")
}

/// Random f with |f(n)| <= C n^γ.
pub fn poly(seed: u64, c: &Rat, gamma: &Rat) -> ArithmeticFunction {
    let c = c.clone();
    let gamma = gamma.clone();
    ArithmeticFunction::new(
        format!("random-poly(seed={seed},C={c},gamma={gamma})"),
        move |n| {
            if n == 1 {
                Rat::one()
            } else {
                signed_coefficient(seed, TAG_POLY, n, 0)
                    * poly_envelope_lo(&c, &gamma, n)
            }
        },
    )
    .expect("normalized")
}

/// Random f with |f(n)| <= A c^n, exactly rational.
pub fn exponential(seed: u64, a: &Rat, c: &Rat) -> ArithmeticFunction {
    let a = a.clone();
    let c = c.clone();
    ArithmeticFunction::new(
        format!("random-exp(seed={seed},A={a},c={c})"),
        move |n| {
            if n == 1 {
                Rat::one()
            } else {
                signed_coefficient(seed, TAG_EXP, n, 0) * &a * rat_pow_u64(&c, n)
            }
        },
    )
    .expect("normalized")
}

/// Random f with |f(n)| <= A c^n that vanishes past `tail_cut`. A zero
/// tail satisfies the envelope trivially while keeping the exact
/// denominators, which grow with n, at a workable size.
pub fn exponential_truncated(seed: u64, a: &Rat, c: &Rat, tail_cut: u64) -> ArithmeticFunction {
    let inner = exponential(seed, a, c);
    ArithmeticFunction::new(
        format!("random-exp-trunc(seed={seed},A={a},c={c},cut={tail_cut})"),
        move |n| {
            if n > tail_cut {
                Rat::zero()
            } else {
                inner.eval_uncached(n)
            }
        },
    )
    .expect("normalized")
}

/// C n^γ h(n) for a seed-fixed totally multiplicative |h| <= 1. The scale
/// C makes |f(m)||f(n)| = C |f(mn)|, so |f| is submultiplicative for
/// C >= 1 and supermultiplicative for C <= 1, exactly (γ integral).
fn scaled_totally_multiplicative(seed: u64, c: &Rat, gamma: i64, label: &str) -> ArithmeticFunction {
    let c = c.clone();
    ArithmeticFunction::new(
        format!("random-{label}(seed={seed},C={c},gamma={gamma})"),
        move |n| {
            if n == 1 {
                return Rat::one();
            }
            let mut h = Rat::one();
            for &(p, e) in factorize(n).factors() {
                let hp = signed_coefficient(seed, TAG_SUBMULT, p, 0);
                h *= rat_pow_u64(&hp, e as u64);
            }
            &c * rat_pow_i64(&rat(n as i64), gamma) * h
        },
    )
    .expect("normalized")
}

/// Random f with submultiplicative |f| and |f(n)| <= C n^γ; needs C >= 1.
pub fn submultiplicative_poly(seed: u64, c: &Rat, gamma: i64) -> ArithmeticFunction {
    assert!(*c >= Rat::one(), "the submultiplicative construction needs C >= 1");
    scaled_totally_multiplicative(seed, c, gamma, "submult")
}

/// Random f with supermultiplicative |f| and |f(n)| <= C n^γ; needs C <= 1.
pub fn supermultiplicative_poly(seed: u64, c: &Rat, gamma: i64) -> ArithmeticFunction {
    assert!(*c <= Rat::one(), "the supermultiplicative construction needs C <= 1");
    scaled_totally_multiplicative(seed, c, gamma, "supermult")
}

/// Random multiplicative f with |f(n)| <= C n^γ. Prime-power values are
/// sampled under min(C, 1) (p^e)^γ so the multiplicative extension stays
/// inside the envelope: the product over prime powers is at most
/// min(C, 1)^{ω(n)} n^γ <= C n^γ.
pub fn multiplicative_poly(seed: u64, c: &Rat, gamma: &Rat) -> ArithmeticFunction {
    let cap = if *c >= Rat::one() { Rat::one() } else { c.clone() };
    let c_label = c.clone();
    let gamma = gamma.clone();
    ArithmeticFunction::new(
        format!("random-mult-poly(seed={seed},C={c_label},gamma={gamma})"),
        move |n| {
            if n == 1 {
                return Rat::one();
            }
            let mut acc = Rat::one();
            for &(p, e) in factorize(n).factors() {
                let env = poly_envelope_lo(&cap, &gamma, p.pow(e));
                acc *= signed_coefficient(seed, TAG_MULT_POLY, p, e as u64) * env;
                if acc.is_zero() {
                    return acc;
                }
            }
            acc
        },
    )
    .expect("normalized")
}

/// Random multiplicative f with f(p^k) = 0 for k >= 2 and |f(n)| <= C n^γ.
pub fn multiplicative_zero_higher(seed: u64, c: &Rat, gamma: &Rat) -> ArithmeticFunction {
    let cap = if *c >= Rat::one() { Rat::one() } else { c.clone() };
    let c_label = c.clone();
    let gamma = gamma.clone();
    ArithmeticFunction::new(
        format!("random-mult-squarefree(seed={seed},C={c_label},gamma={gamma})"),
        move |n| {
            if n == 1 {
                return Rat::one();
            }
            let mut acc = Rat::one();
            for &(p, e) in factorize(n).factors() {
                if e >= 2 {
                    return Rat::zero();
                }
                let env = poly_envelope_lo(&cap, &gamma, p);
                acc *= signed_coefficient(seed, TAG_ZERO_HIGHER, p, 0) * env;
                if acc.is_zero() {
                    return acc;
                }
            }
            acc
        },
    )
    .expect("normalized")
}

/// Random multiplicative f with |f(n)| <= A c^n, supported on the powers of
/// a single seed-chosen prime. Multi-prime support cannot satisfy an
/// exponential envelope: c^{p^a} c^{q^b} exceeds c^{p^a q^b} for c < 1.
pub fn multiplicative_exp_single_prime(seed: u64, a: &Rat, c: &Rat) -> ArithmeticFunction {
    const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
    let p = PRIMES[(splitmix(seed ^ TAG_MULT_EXP) % 6) as usize];
    let a = a.clone();
    let c = c.clone();
    ArithmeticFunction::new(
        format!("random-mult-exp(seed={seed},A={a},c={c},p={p})"),
        move |n| {
            if n == 1 {
                return Rat::one();
            }
            // Powers of p only.
            let mut m = n;
            let mut e = 0u64;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if m != 1 {
                return Rat::zero();
            }
            signed_coefficient(seed, TAG_MULT_EXP, p, e)
                * &a
                * rat_pow_u64(&c, n)
        },
    )
    .expect("normalized")
}

/// Random totally multiplicative f with |f(p)| <= 1 on primes.
pub fn totally_multiplicative(seed: u64) -> ArithmeticFunction {
    ArithmeticFunction::new(format!("random-total(seed={seed})"), move |n| {
        if n == 1 {
            return Rat::one();
        }
        let mut acc = Rat::one();
        for &(p, e) in factorize(n).factors() {
            let fp = signed_coefficient(seed, TAG_TOTAL, p, 0);
            acc *= rat_pow_u64(&fp, e as u64);
            if acc.is_zero() {
                return acc;
            }
        }
        acc
    })
    .expect("normalized")
}

/// Random odd-supported f: zero at even n, |f(n)| <= C n^γ at odd n.
pub fn odd_support_poly(seed: u64, c: &Rat, gamma: &Rat) -> ArithmeticFunction {
    let inner = poly(seed, c, gamma);
    ArithmeticFunction::new(
        format!("random-odd(seed={seed},C={c},gamma={gamma})"),
        move |n| {
            if n % 2 == 0 {
                Rat::zero()
            } else {
                inner.eval_uncached(n)
            }
        },
    )
    .expect("normalized")
}

/// Random f vanishing on 2..=n_cut with |f(n)| <= C n^γ above the cut.
pub fn truncated_low_poly(seed: u64, n_cut: u64, c: &Rat, gamma: &Rat) -> ArithmeticFunction {
    let inner = poly(seed, c, gamma);
    ArithmeticFunction::new(
        format!("random-trunclow(seed={seed},N={n_cut},C={c},gamma={gamma})"),
        move |n| {
            if n >= 2 && n <= n_cut {
                Rat::zero()
            } else {
                inner.eval_uncached(n)
            }
        },
    )
    .expect("normalized")
}

/// Random f vanishing above n_cut with |f(n)| <= C n^γ below it.
pub fn truncated_high_poly(seed: u64, n_cut: u64, c: &Rat, gamma: &Rat) -> ArithmeticFunction {
    let inner = poly(seed, c, gamma);
    ArithmeticFunction::new(
        format!("random-trunchigh(seed={seed},N={n_cut},C={c},gamma={gamma})"),
        move |n| {
            if n > n_cut {
                Rat::zero()
            } else {
                inner.eval_uncached(n)
            }
        },
    )
    .expect("normalized")
}
