//! Arithmetic functions under Dirichlet convolution: exact-rational
//! evaluation, the convolution product, and Dirichlet inverses computed by
//! three independent routes (divisor recursion, the non-recurrent
//! factorization sum, and multiplicative prime-power reconstruction).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::primes::{checked_prime_power, factorize, is_prime};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational p/q.
pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// x^e for u64 exponents. Keeps the fraction canonical without a gcd pass.
pub fn rat_pow_u64(x: &Rat, e: u64) -> Rat {
    use num::traits::Pow;
    if e == 0 {
        return Rat::one();
    }
    Rat::new_raw(Pow::pow(x.numer(), e), Pow::pow(x.denom(), e))
}

/// x^e for signed exponents.
pub fn rat_pow_i64(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        rat_pow_u64(x, e as u64)
    } else {
        rat_pow_u64(x, e.unsigned_abs()).recip()
    }
}

/// The convolution identity ε: ε(1) = 1 and ε(n) = 0 for n >= 2.
pub fn epsilon(n: u64) -> Rat {
    if n == 1 {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// A total map from positive integers to exact rationals with f(1) = 1.
///
/// The evaluator must be deterministic; values are memoized behind a lock so
/// a function can be shared across sweep workers.
#[derive(Clone)]
pub struct ArithmeticFunction {
    name: String,
    eval: Arc<dyn Fn(u64) -> Rat + Send + Sync>,
    memo: Arc<Mutex<HashMap<u64, Rat>>>,
}

impl fmt::Debug for ArithmeticFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArithmeticFunction")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

impl ArithmeticFunction {
    /// Wraps an evaluator, rejecting it unless f(1) = 1. A caller holding
    /// g = a·f with a != 1 must divide by a first and rescale the inverse by
    /// (a f)^{-1}(n) = f^{-1}(n)/a.
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(u64) -> Rat + Send + Sync + 'static,
    ) -> Result<Self> {
        let at_one = eval(1);
        if !at_one.is_one() {
            return Err(Error::NotNormalized {
                found: at_one.to_string(),
            });
        }
        Ok(ArithmeticFunction {
            name: name.into(),
            eval: Arc::new(eval),
            memo: Arc::new(Mutex::new(HashMap::new())),
        })
    }

    /// Sparse table of (n, value) pairs; unlisted n evaluate to 0. The pair
    /// (1, 1) must be present.
    pub fn from_values(name: impl Into<String>, values: Vec<(u64, Rat)>) -> Result<Self> {
        let mut map: HashMap<u64, Rat> = HashMap::new();
        for (n, v) in values {
            if n == 0 {
                return Err(Error::InvalidParameter("table keys must be >= 1".into()));
            }
            map.insert(n, v);
        }
        match map.get(&1) {
            Some(v) if v.is_one() => {}
            other => {
                return Err(Error::NotNormalized {
                    found: other.map_or_else(|| "absent".to_string(), |v| v.to_string()),
                })
            }
        }
        Self::new(name, move |n| {
            map.get(&n).cloned().unwrap_or_else(Rat::zero)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Memoized evaluation.
    pub fn eval(&self, n: u64) -> Rat {
        if let Some(v) = self.memo.lock().unwrap().get(&n) {
            return v.clone();
        }
        let v = (self.eval)(n);
        self.memo
            .lock()
            .unwrap()
            .entry(n)
            .or_insert_with(|| v.clone());
        v
    }

    /// Single evaluation bypassing the memo; used by bulk table builders
    /// that already evaluate every point exactly once.
    pub(crate) fn eval_uncached(&self, n: u64) -> Rat {
        (self.eval)(n)
    }
}

/// A rational with a power-of-two denominator, kept as num / 2^exp.
///
/// The bulk table builders run on this representation whenever every input
/// value is dyadic (integer tables, coefficients at denominator 2^16,
/// anything produced through `from_float`): products and aligned sums need
/// no gcd, and canonicalizing at the end only strips trailing zero bits.
/// The computed values are identical to the general rational path.
#[derive(Clone)]
struct Dyadic {
    num: BigInt,
    exp: u64,
}

impl Dyadic {
    fn zero() -> Self {
        Dyadic {
            num: BigInt::from(0),
            exp: 0,
        }
    }

    fn of(r: &Rat) -> Option<Self> {
        let den = r.denom();
        let tz = den.trailing_zeros()?;
        if den.bits() != tz + 1 {
            return None; // denominator is not a power of two
        }
        Some(Dyadic {
            num: r.numer().clone(),
            exp: tz,
        })
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// self -= a · b
    fn sub_prod(&mut self, a: &Dyadic, b: &Dyadic) {
        let prod = &a.num * &b.num;
        let prod_exp = a.exp + b.exp;
        if self.num.is_zero() {
            self.num = -prod;
            self.exp = prod_exp;
        } else if self.exp >= prod_exp {
            self.num -= prod << (self.exp - prod_exp);
        } else {
            self.num = (&self.num << (prod_exp - self.exp)) - prod;
            self.exp = prod_exp;
        }
    }

    /// self += a · b
    fn add_prod(&mut self, a: &Dyadic, b: &Dyadic) {
        let prod = &a.num * &b.num;
        let prod_exp = a.exp + b.exp;
        if self.num.is_zero() {
            self.num = prod;
            self.exp = prod_exp;
        } else if self.exp >= prod_exp {
            self.num += prod << (self.exp - prod_exp);
        } else {
            self.num = (&self.num << (prod_exp - self.exp)) + prod;
            self.exp = prod_exp;
        }
    }

    fn into_rat(self) -> Rat {
        use num::traits::Pow;
        if self.num.is_zero() {
            return Rat::zero();
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.exp);
        Rat::new_raw(self.num >> tz, Pow::pow(&BigInt::from(2), self.exp - tz))
    }
}

fn dyadic_values(fv: &[Rat]) -> Option<Vec<Dyadic>> {
    fv.iter().map(Dyadic::of).collect()
}

/// A rational num / base^exp over an arbitrary fixed base. The prime-power
/// recursion and the partition sum run on this form whenever every input
/// denominator is a power of one base, which avoids gcd passes on the
/// megabit-sized numbers that exponential-decay functions produce.
#[derive(Clone)]
pub(crate) struct Scaled {
    pub(crate) num: BigInt,
    pub(crate) exp: u64,
}

impl Scaled {
    pub(crate) fn zero() -> Self {
        Scaled {
            num: BigInt::from(0),
            exp: 0,
        }
    }

    pub(crate) fn one() -> Self {
        Scaled {
            num: BigInt::from(1),
            exp: 0,
        }
    }

    pub(crate) fn from_parts(num: BigInt, exp: u64) -> Self {
        Scaled { num, exp }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn align(&mut self, exp: u64, base: &BigInt) {
        use num::traits::Pow;
        if self.exp < exp {
            self.num *= Pow::pow(base, exp - self.exp);
            self.exp = exp;
        }
    }

    /// self += other over the common base.
    pub(crate) fn add_assign(&mut self, other: Scaled, base: &BigInt) {
        use num::traits::Pow;
        if other.num.is_zero() {
            return;
        }
        if self.num.is_zero() {
            *self = other;
        } else if self.exp >= other.exp {
            self.num += other.num * Pow::pow(base, self.exp - other.exp);
        } else {
            self.align(other.exp, base);
            self.num += other.num;
        }
    }

    /// self += a · b over the common base.
    pub(crate) fn add_prod(&mut self, a: &Scaled, b: &Scaled, base: &BigInt) {
        use num::traits::Pow;
        let prod = &a.num * &b.num;
        let prod_exp = a.exp + b.exp;
        if self.num.is_zero() {
            self.num = prod;
            self.exp = prod_exp;
        } else if self.exp >= prod_exp {
            self.num += prod * Pow::pow(base, self.exp - prod_exp);
        } else {
            self.align(prod_exp, base);
            self.num += prod;
        }
    }

    /// Canonical rational, stripping base powers by valuation rather than
    /// a full gcd; a residual gcd only runs for composite bases.
    pub(crate) fn into_rat(mut self, base: &BigInt) -> Rat {
        use num::traits::Pow;
        if self.num.is_zero() {
            return Rat::zero();
        }
        while self.exp > 0 {
            let (q, r) = num::Integer::div_rem(&self.num, base);
            if !r.is_zero() {
                break;
            }
            self.num = q;
            self.exp -= 1;
        }
        if self.exp == 0 {
            return Rat::from_integer(self.num);
        }
        let den = Pow::pow(base, self.exp);
        use num::ToPrimitive;
        let prime_base = base.to_u64().is_some_and(crate::primes::is_prime);
        if prime_base {
            // num has no factor of a prime base left, so this is canonical.
            Rat::new_raw(self.num, den)
        } else {
            Rat::new(self.num, den)
        }
    }
}

/// The common power base of a value set: the smallest denominator above 1,
/// provided every other denominator is one of its powers. Returns the base
/// and the scaled values.
pub(crate) fn common_power_base(values: &[Rat]) -> Option<(BigInt, Vec<Scaled>)> {
    use num::traits::Pow;
    let one = BigInt::from(1);
    let mut base: Option<&BigInt> = None;
    for v in values {
        let d = v.denom();
        if *d != one {
            base = Some(match base {
                None => d,
                Some(b) if d < b => d,
                Some(b) => b,
            });
        }
    }
    let base = match base {
        // All integers: any base works and no alignment ever happens.
        None => {
            let scaled = values
                .iter()
                .map(|v| Scaled::from_parts(v.numer().clone(), 0))
                .collect();
            return Some((BigInt::from(2), scaled));
        }
        Some(b) => b.clone(),
    };
    if base.bits() < 2 {
        return None;
    }
    use num::ToPrimitive;
    let log2_base = base.to_f64()?.log2();
    let mut scaled = Vec::with_capacity(values.len());
    for v in values {
        let d = v.denom();
        if d == &one {
            scaled.push(Scaled::from_parts(v.numer().clone(), 0));
            continue;
        }
        let guess = ((d.bits() as f64 - 0.5) / log2_base).round() as u64;
        let exp = (guess.saturating_sub(1)..=guess + 1)
            .find(|&e| e >= 1 && Pow::pow(&base, e) == *d)?;
        scaled.push(Scaled::from_parts(v.numer().clone(), exp));
    }
    Some((base, scaled))
}

/// Dirichlet convolution (f ∗ g)(n) = Σ_{d|n} f(n/d) g(d).
pub fn convolve(f: &ArithmeticFunction, g: &ArithmeticFunction, n: u64) -> Rat {
    assert!(n >= 1);
    let mut acc = Rat::zero();
    for d in factorize(n).divisors() {
        let fv = f.eval(n / d);
        if fv.is_zero() {
            continue;
        }
        let gv = g.eval(d);
        if gv.is_zero() {
            continue;
        }
        acc += fv * gv;
    }
    acc
}

/// Materialized table of f^{-1}(n) for 1 <= n <= limit.
#[derive(Debug, Clone)]
pub struct InverseTable {
    limit: u64,
    /// 1-indexed; `values[0]` is unused.
    values: Vec<Rat>,
}

impl InverseTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn get(&self, n: u64) -> &Rat {
        assert!(n >= 1 && n <= self.limit, "n out of table range");
        &self.values[n as usize]
    }

    /// Checks (f ∗ f^{-1})(n) = ε(n) by direct convolution for every
    /// n <= limit, returning the first failing n. The full convolution is
    /// accumulated by a push sieve over divisor pairs.
    pub fn verify_convolution(&self, f: &ArithmeticFunction) -> Option<u64> {
        let limit = self.limit as usize;
        let fv: Vec<Rat> = std::iter::once(Rat::zero())
            .chain((1..=self.limit).map(|n| f.eval_uncached(n)))
            .collect();
        let nonzero_f: Vec<usize> = (1..=limit).filter(|&m| !fv[m].is_zero()).collect();

        if let (Some(dv), Some(df)) = (dyadic_values(&self.values[1..]), dyadic_values(&fv[1..])) {
            let mut acc = vec![Dyadic::zero(); limit + 1];
            for d in 1..=limit {
                if dv[d - 1].is_zero() {
                    continue;
                }
                for &m in &nonzero_f {
                    if d * m > limit {
                        break;
                    }
                    acc[d * m].add_prod(&df[m - 1], &dv[d - 1]);
                }
            }
            return (1..=self.limit)
                .find(|&n| acc[n as usize].clone().into_rat() != epsilon(n));
        }

        let mut acc = vec![Rat::zero(); limit + 1];
        for d in 1..=limit {
            if self.values[d].is_zero() {
                continue;
            }
            for &m in &nonzero_f {
                if d * m > limit {
                    break;
                }
                acc[d * m] += &fv[m] * &self.values[d];
            }
        }
        (1..=self.limit).find(|&n| acc[n as usize] != epsilon(n))
    }

    /// View of the table as an arithmetic function; n beyond the table
    /// evaluates to 0.
    pub fn to_function(&self, name: impl Into<String>) -> ArithmeticFunction {
        let values = self.values.clone();
        ArithmeticFunction::new(name, move |n| {
            values.get(n as usize).cloned().unwrap_or_else(Rat::zero)
        })
        .expect("inverse tables always have value 1 at n = 1")
    }
}

/// Dirichlet inverse by the divisor recursion
/// f^{-1}(1) = 1, f^{-1}(n) = -Σ_{d|n, d<n} f(n/d) f^{-1}(d).
///
/// Runs as a push sieve in O(Σ τ(n)) rational operations: once row d is
/// final it subtracts f(m) f^{-1}(d) from every multiple d·m, so by the
/// time a row becomes the source all of its own divisor contributions have
/// arrived. Normalization is enforced when the [`ArithmeticFunction`] is
/// built, so the computation itself cannot fail.
pub fn inverse_recursive(f: &ArithmeticFunction, limit: u64) -> InverseTable {
    assert!(limit >= 1);
    let fv: Vec<Rat> = std::iter::once(Rat::zero())
        .chain((1..=limit).map(|n| f.eval_uncached(n)))
        .collect();
    inverse_from_values(&fv)
}

/// As [`inverse_recursive`] over pre-evaluated values `fv[n] = f(n)`
/// (index 0 unused), for callers that already hold the table.
pub fn inverse_from_values(fv: &[Rat]) -> InverseTable {
    let limit_us = fv.len() - 1;
    let limit = limit_us as u64;
    assert!(limit >= 1 && fv[1].is_one(), "values must satisfy f(1) = 1");
    let nonzero_f: Vec<usize> = (2..=limit_us).filter(|&m| !fv[m].is_zero()).collect();

    if let Some(df) = dyadic_values(&fv[1..]) {
        let mut values = vec![Dyadic::zero(); limit_us + 1];
        values[1] = Dyadic::of(&Rat::one()).unwrap();
        for d in 1..=limit_us {
            let (head, tail) = values.split_at_mut(d + 1);
            let src = &head[d];
            if src.is_zero() {
                continue;
            }
            for &m in &nonzero_f {
                if d * m > limit_us {
                    break;
                }
                tail[d * m - d - 1].sub_prod(&df[m - 1], src);
            }
        }
        let values: Vec<Rat> = values.into_iter().map(Dyadic::into_rat).collect();
        return InverseTable { limit, values };
    }

    let mut values = vec![Rat::zero(); limit_us + 1];
    values[1] = Rat::one();
    for d in 1..=limit_us {
        // Targets d·m satisfy d·m >= 2d > d, so the split keeps the
        // finalized source disjoint from the rows still accumulating.
        let (head, tail) = values.split_at_mut(d + 1);
        let src = &head[d];
        if src.is_zero() {
            continue;
        }
        for &m in &nonzero_f {
            if d * m > limit_us {
                break;
            }
            tail[d * m - d - 1] -= &fv[m] * src;
        }
    }
    InverseTable { limit, values }
}

/// Default ceiling on enumerated factor prefixes in the non-recurrent sum.
pub const DEFAULT_TUPLE_CEILING: u64 = 10_000_000;

/// Dirichlet inverse by the non-recurrent sum
/// f^{-1}(n) = Σ_{k=1}^{Ω(n)} (-1)^k Σ_{d_1 ⋯ d_k = n, d_i >= 2} f(d_1) ⋯ f(d_k),
/// evaluated by direct enumeration of ordered factorizations.
pub fn inverse_sum_formula(f: &ArithmeticFunction, n: u64) -> Result<Rat> {
    inverse_sum_formula_with_ceiling(f, n, DEFAULT_TUPLE_CEILING)
}

/// As [`inverse_sum_formula`] with an explicit enumeration ceiling. The
/// ceiling counts visited factor prefixes, so it also caps the H(n) ordered
/// factorizations enumerated.
pub fn inverse_sum_formula_with_ceiling(
    f: &ArithmeticFunction,
    n: u64,
    ceiling: u64,
) -> Result<Rat> {
    assert!(n >= 2, "the non-recurrent sum is defined for n >= 2");
    // The ordered sum is grouped over non-decreasing factor tuples: each
    // multiset {d_1^{m_1}, ..., d_r^{m_r}} stands for k!/(m_1!···m_r!)
    // ordered tuples with the same product of f-values and the same sign
    // (-1)^k. Every factor divides n, so one divisor list serves the whole
    // search; f is evaluated on it once up front.
    let mut visited = 0u64;
    let mut acc = Rat::zero();
    let divs: Vec<u64> = factorize(n).divisors().into_iter().skip(1).collect();
    let fd: Vec<Rat> = divs.iter().map(|&d| f.eval(d)).collect();
    let mut path: Vec<usize> = Vec::new();
    descend(&divs, &fd, n, 0, &Rat::one(), &mut path, &mut acc, &mut visited, ceiling, n)?;
    return Ok(acc);

    /// Orderings of the multiset recorded in `path` (runs of equal
    /// divisor indices).
    fn ordering_count(path: &[usize]) -> Rat {
        let mut numerator = num::BigUint::from(1u32);
        for i in 2..=path.len() {
            numerator *= num::BigUint::from(i);
        }
        let mut den = num::BigUint::from(1u32);
        let mut run = 1usize;
        for w in path.windows(2) {
            if w[0] == w[1] {
                run += 1;
                den *= num::BigUint::from(run);
            } else {
                run = 1;
            }
        }
        Rat::from_integer(BigInt::from(numerator / den))
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        divs: &[u64],
        fd: &[Rat],
        remaining: u64,
        min_index: usize,
        prefix: &Rat,
        path: &mut Vec<usize>,
        acc: &mut Rat,
        visited: &mut u64,
        ceiling: u64,
        n: u64,
    ) -> Result<()> {
        for (i, &d) in divs.iter().enumerate().skip(min_index) {
            if d > remaining {
                break;
            }
            if !remaining.is_multiple_of(d) {
                continue;
            }
            *visited += 1;
            if *visited > ceiling {
                return Err(Error::EnumerationCeiling { n, ceiling });
            }
            if fd[i].is_zero() {
                continue;
            }
            let prod = prefix * &fd[i];
            path.push(i);
            if d == remaining {
                let term = ordering_count(path) * &prod;
                if path.len() % 2 == 1 {
                    *acc -= term;
                } else {
                    *acc += term;
                }
            } else {
                descend(divs, fd, remaining / d, i, &prod, path, acc, visited, ceiling, n)?;
            }
            path.pop();
        }
        Ok(())
    }
}

/// Dirichlet inverse at a prime power via
/// f^{-1}(p) = -f(p), f^{-1}(p^k) = -Σ_{m=0}^{k-1} f(p^{k-m}) f^{-1}(p^m).
pub fn inverse_prime_power(f: &ArithmeticFunction, p: u64, k: u32) -> Result<Rat> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    assert!(k >= 1);
    checked_prime_power(p, k)?;
    Ok(inverse_prime_power_unchecked(f, p, k))
}

fn inverse_prime_power_unchecked(f: &ArithmeticFunction, p: u64, k: u32) -> Rat {
    let fvals: Vec<Rat> = (1..=k).map(|j| f.eval(p.pow(j))).collect();
    if let Some((base, sf)) = common_power_base(&fvals) {
        let mut inv: Vec<Scaled> = vec![Scaled::one()];
        for j in 1..=k as usize {
            let mut acc = Scaled::zero();
            for m in 0..j {
                let a = &sf[j - m - 1]; // f(p^{j-m})
                if a.is_zero() || inv[m].is_zero() {
                    continue;
                }
                acc.add_prod(a, &inv[m], &base);
            }
            acc.num = -acc.num;
            inv.push(acc);
        }
        return inv.pop().unwrap().into_rat(&base);
    }
    let mut inv: Vec<Rat> = Vec::with_capacity(k as usize + 1);
    inv.push(Rat::one());
    for j in 1..=k {
        let mut acc = Rat::zero();
        for m in 0..j {
            let fv = &fvals[(j - m - 1) as usize];
            if fv.is_zero() || inv[m as usize].is_zero() {
                continue;
            }
            acc += fv * &inv[m as usize];
        }
        inv.push(-acc);
    }
    inv.pop().unwrap()
}

/// Dirichlet inverse of a multiplicative f as the product of prime-power
/// inverses. The caller asserts multiplicativity; the value agrees with
/// [`inverse_recursive`] exactly when f is in fact multiplicative.
pub fn inverse_multiplicative(f: &ArithmeticFunction, n: u64) -> Rat {
    assert!(n >= 1);
    let mut acc = Rat::one();
    for &(p, e) in factorize(n).factors() {
        acc *= inverse_prime_power_unchecked(f, p, e);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Dirichlet inverse of a totally multiplicative f: μ(n) f(n).
pub fn inverse_totally_multiplicative(f: &ArithmeticFunction, n: u64) -> Rat {
    match factorize(n).mobius() {
        0 => Rat::zero(),
        1 => f.eval(n),
        _ => -f.eval(n),
    }
}

/// Outcome of one multiplicativity property over the scanned pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub holds: bool,
    /// First failing pair (m, n) in the scan order m <= n, ascending m then
    /// ascending n.
    pub counterexample: Option<(u64, u64)>,
}

impl PropertyCheck {
    fn record(&mut self, m: u64, n: u64) {
        if self.holds {
            self.holds = false;
            self.counterexample = Some((m, n));
        }
    }
}

/// Exhaustive classification of f over all pairs m <= n with m·n <= limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativityReport {
    pub totally_multiplicative: PropertyCheck,
    pub multiplicative: PropertyCheck,
    pub supermultiplicative_abs: PropertyCheck,
    pub submultiplicative_abs: PropertyCheck,
}

impl MultiplicativityReport {
    /// All labels that hold; empty means none.
    pub fn labels(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.totally_multiplicative.holds {
            out.push("totally multiplicative");
        }
        if self.multiplicative.holds {
            out.push("multiplicative");
        }
        if self.supermultiplicative_abs.holds {
            out.push("supermultiplicative-abs");
        }
        if self.submultiplicative_abs.holds {
            out.push("submultiplicative-abs");
        }
        out
    }
}

/// Tests f(m)f(n) = f(mn) (all pairs and coprime pairs) and the super- and
/// sub-multiplicativity of |f| exhaustively over m·n <= limit. Pairs with
/// m = 1 are skipped: f(1) = 1 makes them vacuous.
pub fn check_multiplicativity(f: &ArithmeticFunction, limit: u64) -> MultiplicativityReport {
    assert!(limit >= 2);
    let fv: Vec<Rat> = std::iter::once(Rat::zero())
        .chain((1..=limit).map(|n| f.eval_uncached(n)))
        .collect();
    let pass = PropertyCheck {
        holds: true,
        counterexample: None,
    };
    let mut report = MultiplicativityReport {
        totally_multiplicative: pass.clone(),
        multiplicative: pass.clone(),
        supermultiplicative_abs: pass.clone(),
        submultiplicative_abs: pass,
    };
    let mut m = 2u64;
    'scan: while m * m <= limit {
        let mut n = m;
        while m * n <= limit {
            let prod = &fv[m as usize] * &fv[n as usize];
            let joint = &fv[(m * n) as usize];
            if prod != *joint {
                report.totally_multiplicative.record(m, n);
                if gcd_u64(m, n) == 1 {
                    report.multiplicative.record(m, n);
                }
            }
            let abs_prod = prod.abs();
            let abs_joint = joint.abs();
            if abs_prod > abs_joint {
                report.supermultiplicative_abs.record(m, n);
            }
            if abs_prod < abs_joint {
                report.submultiplicative_abs.record(m, n);
            }
            if !(report.totally_multiplicative.holds
                || report.multiplicative.holds
                || report.supermultiplicative_abs.holds
                || report.submultiplicative_abs.holds)
            {
                break 'scan; // every label already has its first witness
            }
            n += 1;
        }
        m += 1;
    }
    report
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
