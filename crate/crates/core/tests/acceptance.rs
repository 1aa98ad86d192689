//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//! Every tolerance and threshold is pinned in the assertions below.

use std::time::{Duration, Instant};

use dirichlet_core::arith::{
    check_multiplicativity, inverse_multiplicative, inverse_prime_power, inverse_recursive,
    inverse_sum_formula, rat, rat_frac, rat_pow_i64, rat_pow_u64, Rat,
};
use dirichlet_core::bounds::{
    generators, prime_power_exp, prime_power_partition_bound, rat_log2, verify_sweep, BoundSpec,
    BoundValue, Family, SweepMode,
};
use dirichlet_core::factorizations::{
    d_max_k, d_max_upper_bound_exact, d_min_k, d_min_log_bound, d_min_lower_bound,
    enumerate_ordered_factorizations, h_k_tables, h_table, partition_multinomial_sum, FactorSet,
};
use dirichlet_core::primes::{factorize, SpfSieve};
use dirichlet_core::zeta::{solve_default, ZetaEquation};
use num::{One, Signed, ToPrimitive, Zero};

fn pass(criterion: u32, what: &str, detail: String) {
    println!("criterion {criterion:2} ({what}): PASS — {detail}");
}

#[test]
fn criterion_01_root_regression() {
    let t = Instant::now();
    let rho = solve_default(ZetaEquation::FullZetaEquals { target: 2.0 }).unwrap();
    let eta = solve_default(ZetaEquation::OddZetaEquals { target: 2.0 }).unwrap();
    let elapsed = t.elapsed();
    assert!((rho.value - 1.72865).abs() < 1e-5, "rho = {}", rho.value);
    assert!((eta.value - 1.37779).abs() < 1e-5, "eta = {}", eta.value);
    assert!(rho.enclosure_width() <= 1e-9 && eta.enclosure_width() <= 1e-9);
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(
        1,
        "root regression",
        format!("rho = {:.9}, eta = {:.9} in {elapsed:?}", rho.value, eta.value),
    );
}

#[test]
fn criterion_02_convolution_round_trip() {
    let t = Instant::now();
    let limit = 10_000u64;
    for seed in 0..50u64 {
        let f = generators::bounded(seed);
        let table = inverse_recursive(&f, limit);
        assert_eq!(table.verify_convolution(&f), None, "seed = {seed}");
    }
    let elapsed = t.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    pass(
        2,
        "convolution round-trip",
        format!("50 functions exact to n = {limit} in {elapsed:?}"),
    );
}

#[test]
fn criterion_03_route_equivalence() {
    // Non-recurrent sum against the divisor recursion.
    for seed in 0..10u64 {
        let f = generators::bounded(seed + 100);
        let table = inverse_recursive(&f, 5000);
        for n in 2..=5000u64 {
            assert_eq!(
                inverse_sum_formula(&f, n).unwrap(),
                *table.get(n),
                "seed = {seed}, n = {n}"
            );
        }
    }
    // Multiplicative reconstruction against the divisor recursion.
    for seed in 0..5u64 {
        let f = generators::multiplicative_poly(seed + 100, &rat(1), &rat(0));
        assert!(check_multiplicativity(&f, 1000).multiplicative.holds);
        let table = inverse_recursive(&f, 10_000);
        for n in 1..=10_000u64 {
            assert_eq!(
                inverse_multiplicative(&f, n),
                *table.get(n),
                "seed = {seed}, n = {n}"
            );
        }
    }
    pass(
        3,
        "route equivalence",
        "sum formula to 5000 on 10 functions, multiplicative route to 10^4 on 5".into(),
    );
}

#[test]
fn criterion_04_hille_identity() {
    let limit = 100_000u64;
    let f = Family::Hille.function();
    let table = inverse_recursive(&f, limit);
    let h = h_table(limit, &FactorSet::all_from_2()).unwrap();
    for n in 1..=limit {
        assert_eq!(*table.get(n), rat(h[n as usize] as i64), "n = {n}");
    }
    // Independent ground truth: full enumeration up to 3000.
    let set = FactorSet::all_from_2();
    for n in 2..=3000u64 {
        let tuples = enumerate_ordered_factorizations(n, &set, None).unwrap();
        assert_eq!(tuples.len() as u64, h[n as usize], "n = {n}");
    }
    pass(
        4,
        "Hille identity",
        format!("f^-1 = H to n = {limit}, enumeration-checked to 3000"),
    );
}

#[test]
fn criterion_05_h_growth_bounds() {
    let t = Instant::now();
    let limit = 1_000_000u64;
    let rho = solve_default(ZetaEquation::FullZetaEquals { target: 2.0 }).unwrap();
    let eta = solve_default(ZetaEquation::OddZetaEquals { target: 2.0 }).unwrap();
    let table = h_table(limit, &FactorSet::all_from_2()).unwrap();
    let odd_table = h_table(limit, &FactorSet::odd_from_3()).unwrap();
    let mut max_ratio = 0.0f64;
    for n in 2..=limit {
        let h = table[n as usize] as f64;
        let cap = (n as f64).powf(rho.hi) * (1.0 + 1e-12);
        assert!(h < cap, "H({n}) = {h} >= {cap}");
        max_ratio = max_ratio.max(h / cap);
        if n % 2 == 1 {
            assert_eq!(table[n as usize], odd_table[n as usize]);
            let odd_cap = (n as f64).powf(eta.hi) * (1.0 + 1e-12);
            assert!(h < odd_cap, "odd H({n}) = {h} >= {odd_cap}");
        }
    }
    let elapsed = t.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    pass(
        5,
        "H growth bounds",
        format!("strict to n = 10^6, max H(n)/n^rho = {max_ratio:.6} in {elapsed:?}"),
    );
}

#[test]
fn criterion_06_h_k_bound() {
    let limit = 10_000u64;
    let zeta2_minus_1 = std::f64::consts::PI.powi(2) / 6.0 - 1.0;
    let odd_base = 0.75 * std::f64::consts::PI.powi(2) / 6.0 - 1.0;
    let sieve = SpfSieve::new(limit);
    let layers = h_k_tables(limit, 13, &FactorSet::all_from_2()).unwrap();
    for n in 2..=limit {
        let omega = sieve.factorize(n).big_omega();
        for k in 1..=omega {
            let hk = layers[(k - 1) as usize][n as usize] as f64;
            let bound = zeta2_minus_1.powi(k as i32 - 1) * (n as f64).powi(2) / 4.0;
            assert!(hk <= bound * (1.0 + 1e-12), "n = {n}, k = {k}");
            if n % 2 == 1 {
                let odd = odd_base.powi(k as i32 - 1) * (n as f64).powi(2) / 9.0;
                assert!(hk <= odd * (1.0 + 1e-12), "odd n = {n}, k = {k}");
            }
        }
    }
    pass(6, "H_k bounds", "all n <= 10^4, k <= Omega(n), plus odd variant".into());
}

#[test]
fn criterion_07_optimal_multiplicative_family() {
    for (c, g) in [(rat(1), 0i64), (rat(3), -1), (rat_frac(1, 2), 2)] {
        let fam = Family::TwoPowerPoly { c: c.clone(), gamma: g };
        let f = fam.function();
        let spec = BoundSpec::mult_poly(c.clone(), rat(g)).unwrap();
        for k in 1..=30u32 {
            let n = 1u64 << k;
            let closed = &c
                * rat_pow_u64(&(&c + Rat::one()), (k - 1) as u64)
                * rat_pow_i64(&rat(2), k as i64 * g);
            let inv = inverse_prime_power(&f, 2, k).unwrap();
            assert_eq!(inv, closed, "C = {c}, g = {g}, k = {k}");
            assert_eq!(inv, fam.known_inverse(n).unwrap());
            // Bound ratio is exactly 1 on the family's support.
            match spec.value(n, &factorize(n)).unwrap() {
                BoundValue::Exact(b) => assert_eq!(b, inv.abs(), "ratio != 1 at k = {k}"),
                other => panic!("expected exact bound, got {other:?}"),
            }
        }
    }
    pass(
        7,
        "optimal multiplicative family",
        "closed form and bound ratio 1 for k <= 30 at three (C, gamma)".into(),
    );
}

#[test]
fn criterion_08_partition_bound_equality() {
    for (a, c) in [(rat(1), rat_frac(1, 2)), (rat(2), rat_frac(1, 3))] {
        let f = prime_power_exp(&a, &c);
        for p in [2u64, 3, 5] {
            for k in 1..=8u32 {
                let inv = inverse_prime_power(&f, p, k).unwrap().abs();
                let bound = prime_power_partition_bound(&a, &c, p, k).unwrap();
                assert_eq!(inv, bound, "A = {a}, c = {c}, p = {p}, k = {k}");
            }
        }
        // Composition identity behind the bound.
        for k in 1..=20u32 {
            assert_eq!(
                partition_multinomial_sum(&a, k).unwrap(),
                &a * rat_pow_u64(&(&a + Rat::one()), (k - 1) as u64),
                "A = {a}, k = {k}"
            );
        }
    }
    pass(
        8,
        "partition bound equality",
        "equality at p in {2,3,5}, k <= 8; multinomial identity to k = 20".into(),
    );
}

#[test]
fn criterion_09_general_polynomial_bound() {
    let params = [
        (rat(1), rat(0)),
        (rat(2), rat(-1)),
        (rat_frac(1, 2), rat_frac(1, 2)),
    ];
    let mut checked = 0u64;
    for seed in 0..200u64 {
        let (c, g) = &params[(seed % 3) as usize];
        let f = generators::poly(seed.wrapping_add(900), c, g);
        let spec = BoundSpec::general_poly(c.clone(), g.clone()).unwrap();
        let outcome = verify_sweep(&spec, &f, 2..=10_000, SweepMode::Exhaustive).unwrap();
        assert_eq!(outcome.summary.failures, 0, "seed = {seed}");
        checked += outcome.summary.checked;
    }
    pass(
        9,
        "general polynomial bound",
        format!("200 functions, {checked} comparisons, zero failures"),
    );
}

#[test]
fn criterion_10_d_min_max_bounds() {
    let limit = 2000u64;
    let sieve = SpfSieve::new(limit);
    let mut equality_cases = 0u64;
    let mut first_equality = None;
    for n in 2..=limit {
        let omega = sieve.factorize(n).big_omega();
        for k in 1..=omega {
            let dmin = d_min_k(n, k).unwrap().expect("feasible");
            let dmax = d_max_k(n, k).unwrap().expect("feasible");
            let lower = d_min_lower_bound(n, k);
            assert!(
                dmin as f64 >= lower * (1.0 - 1e-12),
                "d_min({n}, {k}) = {dmin} < {lower}"
            );
            assert!(lower >= d_min_log_bound(n) * (1.0 - 1e-12), "({n}, {k})");
            let upper = d_max_upper_bound_exact(n, k);
            let dmax_rat = rat(dmax as i64);
            assert!(dmax_rat <= upper, "d_max({n}, {k}) = {dmax} > {upper}");
            if dmax_rat == upper {
                equality_cases += 1;
                first_equality.get_or_insert((n, k));
            }
        }
        // One infeasible slot per n: both sentinels.
        assert_eq!(d_min_k(n, omega + 1).unwrap(), None);
        assert_eq!(d_max_k(n, omega + 1).unwrap(), None);
    }
    // The r = 1 structure (one large factor, k-1 twos) attains the bound,
    // e.g. at n = 12, k = 2.
    assert!(equality_cases > 0);
    assert_eq!(d_max_k(12, 2).unwrap(), Some(8));
    assert_eq!(d_max_upper_bound_exact(12, 2), rat(8));
    pass(
        10,
        "d_min/d_max bounds",
        format!(
            "all n <= {limit}, feasible k; d_max bound met with equality {equality_cases} times, first at {:?}",
            first_equality.unwrap()
        ),
    );
}

#[test]
fn criterion_11_truncated_and_odd_variants() {
    // Vanishing low part (zeta(s) = 1/C + head).
    for seed in 0..20u64 {
        let f = generators::truncated_low_poly(seed + 300, 5, &rat(1), &rat(0));
        let spec = BoundSpec::truncated_low(5, rat(1), rat(0)).unwrap();
        let outcome = verify_sweep(&spec, &f, 2..=10_000, SweepMode::Exhaustive).unwrap();
        assert_eq!(outcome.summary.failures, 0, "trunclow seed = {seed}");
    }
    // Vanishing high part (finite sum = 1/C).
    for seed in 0..20u64 {
        let f = generators::truncated_high_poly(seed + 300, 6, &rat(1), &rat(0));
        let spec = BoundSpec::truncated_high(6, rat(1), rat(0)).unwrap();
        let outcome = verify_sweep(&spec, &f, 2..=10_000, SweepMode::Exhaustive).unwrap();
        assert_eq!(outcome.summary.failures, 0, "trunchigh seed = {seed}");
    }
    // Odd support; C = 1 must resolve the exponent to eta.
    let spec = BoundSpec::odd_support(rat(1), rat(0)).unwrap();
    let varsigma = spec.exponent().unwrap();
    assert!(
        (varsigma.value - 1.3777851698375412).abs() < 1e-8,
        "odd-support exponent {}",
        varsigma.value
    );
    for seed in 0..20u64 {
        let f = generators::odd_support_poly(seed + 300, &rat(1), &rat(0));
        let outcome = verify_sweep(&spec, &f, 2..=10_000, SweepMode::Exhaustive).unwrap();
        assert_eq!(outcome.summary.failures, 0, "odd seed = {seed}");
    }
    pass(
        11,
        "truncated and odd-support bounds",
        "20 seeds each for the low-cut, high-cut, and odd cases; odd C=1 exponent is eta".into(),
    );
}

#[test]
fn criterion_12_exponential_regimes() {
    let limit = 5000u64;
    // c in (0, 1): the Omega-weighted bound, and independently the
    // rho + e ln c bound when A <= 1.
    for (a, c) in [(rat(1), rat_frac(1, 2)), (rat(2), rat_frac(1, 2))] {
        let spec = BoundSpec::exp_small_c(a.clone(), c.clone()).unwrap();
        for seed in 0..8u64 {
            let f = generators::exponential(seed + 500, &a, &c);
            let outcome = verify_sweep(&spec, &f, 2..=limit, SweepMode::Exhaustive).unwrap();
            assert_eq!(outcome.summary.failures, 0, "A = {a}, seed = {seed}");
            if a <= Rat::one() {
                let unit = BoundSpec::exp_small_c_unit_a(c.clone()).unwrap();
                let outcome = verify_sweep(&unit, &f, 2..=limit, SweepMode::Exhaustive).unwrap();
                assert_eq!(outcome.summary.failures, 0, "unit-A seed = {seed}");
            }
        }
    }
    // c > 1: the first, fully explicit inequality only; the asymptotic
    // constant is fitted empirically and reported.
    let (a, c) = (rat(1), rat(2));
    let spec = BoundSpec::exp_large_c(a.clone(), c.clone()).unwrap();
    let log2_c = c.to_f64().unwrap().log2();
    let mut fitted_log2 = f64::NEG_INFINITY;
    for seed in 0..8u64 {
        let f = generators::exponential(seed + 500, &a, &c);
        let outcome = verify_sweep(&spec, &f, 2..=limit, SweepMode::Exhaustive).unwrap();
        assert_eq!(outcome.summary.failures, 0, "large-c seed = {seed}");
        for r in &outcome.reports {
            if !r.inv_abs.is_zero() {
                fitted_log2 = fitted_log2.max(rat_log2(&r.inv_abs) - r.n as f64 * log2_c);
            }
        }
    }
    pass(
        12,
        "exponential regimes",
        format!(
            "8 seeds per (A, c); fitted A-tilde for (1, 2) is 2^{fitted_log2:.4} = {:.6}",
            fitted_log2.exp2()
        ),
    );
}
