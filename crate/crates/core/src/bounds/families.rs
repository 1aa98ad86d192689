//! Built-in extremal function families. Each family carries the closed-form
//! inverse stated for it, usable as an oracle on the family's support.

use num::{One, Zero};

use crate::arith::{rat, rat_pow_i64, rat_pow_u64, ArithmeticFunction, Rat};
use crate::factorizations::{h, FactorSet};
use crate::primes::factorize;

/// The six built-in extremal families.
#[derive(Debug, Clone)]
pub enum Family {
    /// f(2) = -1 and f(n) = 0 for n >= 3; the inverse is 1 on powers of 2
    /// and 0 elsewhere.
    OnlyTwo,
    /// f(n) = -1 for n >= 2; the inverse counts ordered factorizations,
    /// f^{-1}(n) = H(n).
    Hille,
    /// f(n) = -n^γ; the inverse is H(n) n^γ. γ is kept integral so values
    /// stay rational.
    PowerGamma { gamma: i64 },
    /// f(2^k) = -C 2^{kγ}, zero off powers of 2; the inverse is
    /// C (C+1)^{k-1} 2^{kγ}, which meets the multiplicative polynomial
    /// bound with equality.
    TwoPowerPoly { c: Rat, gamma: i64 },
    /// f(2) = -A c², zero for n >= 3; the inverse on powers of 2 is
    /// f^{-1}(2^k) = A^k c^{2k}, an exact polynomial decay.
    TwoExp { a: Rat, c: Rat },
    /// f(2^k) = -A c^{2^k}, zero off powers of 2; no closed-form inverse
    /// beyond the leading term, use the prime-power recursion.
    TwoPowerExp { a: Rat, c: Rat },
}

impl Family {
    pub fn function(&self) -> ArithmeticFunction {
        let af = match self {
            Family::OnlyTwo => ArithmeticFunction::new("only-two", |n| match n {
                1 => Rat::one(),
                2 => -Rat::one(),
                _ => Rat::zero(),
            }),
            Family::Hille => ArithmeticFunction::new("hille", |n| {
                if n == 1 {
                    Rat::one()
                } else {
                    -Rat::one()
                }
            }),
            Family::PowerGamma { gamma } => {
                let g = *gamma;
                ArithmeticFunction::new(format!("power(gamma={g})"), move |n| {
                    if n == 1 {
                        Rat::one()
                    } else {
                        -rat_pow_i64(&rat(n as i64), g)
                    }
                })
            }
            Family::TwoPowerPoly { c, gamma } => {
                let c = c.clone();
                let g = *gamma;
                ArithmeticFunction::new(format!("two-power-poly(C={c},gamma={g})"), move |n| {
                    if n == 1 {
                        Rat::one()
                    } else if n.is_power_of_two() {
                        let k = n.trailing_zeros() as i64;
                        -(&c * rat_pow_i64(&rat(2), k * g))
                    } else {
                        Rat::zero()
                    }
                })
            }
            Family::TwoExp { a, c } => {
                let v = -(a.clone() * rat_pow_u64(c, 2));
                ArithmeticFunction::new(format!("two-exp(A={a},c={c})"), move |n| match n {
                    1 => Rat::one(),
                    2 => v.clone(),
                    _ => Rat::zero(),
                })
            }
            Family::TwoPowerExp { a, c } => {
                let a = a.clone();
                let c = c.clone();
                ArithmeticFunction::new(format!("two-power-exp(A={a},c={c})"), move |n| {
                    if n == 1 {
                        Rat::one()
                    } else if n.is_power_of_two() {
                        -(&a * rat_pow_u64(&c, n))
                    } else {
                        Rat::zero()
                    }
                })
            }
        };
        af.expect("built-in families are normalized")
    }

    /// The paper-stated closed-form inverse at n, where one exists.
    pub fn known_inverse(&self, n: u64) -> Option<Rat> {
        if n == 1 {
            return Some(Rat::one());
        }
        match self {
            Family::OnlyTwo => Some(if n.is_power_of_two() {
                Rat::one()
            } else {
                Rat::zero()
            }),
            Family::Hille => Some(rat(h(n, &FactorSet::all_from_2()).ok()? as i64)),
            Family::PowerGamma { gamma } => {
                let hn = h(n, &FactorSet::all_from_2()).ok()?;
                Some(rat(hn as i64) * rat_pow_i64(&rat(n as i64), *gamma))
            }
            Family::TwoPowerPoly { c, gamma } => Some(if n.is_power_of_two() {
                let k = n.trailing_zeros() as u64;
                c * rat_pow_u64(&(c + Rat::one()), k - 1)
                    * rat_pow_i64(&rat(2), k as i64 * gamma)
            } else {
                Rat::zero()
            }),
            Family::TwoExp { a, c } => Some(if n.is_power_of_two() {
                let k = n.trailing_zeros() as u64;
                rat_pow_u64(a, k) * rat_pow_u64(c, 2 * k)
            } else {
                Rat::zero()
            }),
            Family::TwoPowerExp { .. } => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Family::OnlyTwo => "onlytwo".into(),
            Family::Hille => "hille".into(),
            Family::PowerGamma { gamma } => format!("power:g={gamma}"),
            Family::TwoPowerPoly { c, gamma } => format!("twopowerpoly:C={c},g={gamma}"),
            Family::TwoExp { a, c } => format!("twoexp:A={a},c={c}"),
            Family::TwoPowerExp { a, c } => format!("twopowerexp:A={a},c={c}"),
        }
    }

    /// (name, parameters, description, closed-form inverse) rows for the
    /// `families` listing.
    pub fn catalog() -> Vec<[&'static str; 4]> {
        vec![
            [
                "onlytwo",
                "-",
                "f(2) = -1, f(n) = 0 for n >= 3",
                "f^-1(2^k) = 1, zero elsewhere",
            ],
            [
                "hille",
                "-",
                "f(n) = -1 for all n >= 2",
                "f^-1(n) = H(n)",
            ],
            [
                "power",
                "g (integer)",
                "f(n) = -n^g",
                "f^-1(n) = H(n) n^g",
            ],
            [
                "twopowerpoly",
                "C (rational), g (integer)",
                "f(2^k) = -C 2^{kg}, zero off powers of 2",
                "f^-1(2^k) = C (C+1)^{k-1} 2^{kg}",
            ],
            [
                "twoexp",
                "A, c (rationals)",
                "f(2) = -A c^2, zero for n >= 3",
                "f^-1(2^k) = A^k c^{2k}",
            ],
            [
                "twopowerexp",
                "A, c (rationals)",
                "f(2^k) = -A c^{2^k}, zero off powers of 2",
                "leading term A c^{2^k}; exact values via the prime-power recursion",
            ],
        ]
    }
}

/// The multiplicative function with f(p^k) = -A c^{p^k} at every prime
/// power: the equality witness of the partition bound.
pub fn prime_power_exp(a: &Rat, c: &Rat) -> ArithmeticFunction {
    let a = a.clone();
    let c = c.clone();
    ArithmeticFunction::new(format!("prime-power-exp(A={a},c={c})"), move |n| {
        if n == 1 {
            return Rat::one();
        }
        let mut acc = Rat::one();
        for &(p, e) in factorize(n).factors() {
            acc *= -(&a * rat_pow_u64(&c, p.pow(e)));
        }
        acc
    })
    .expect("normalized by construction")
}
