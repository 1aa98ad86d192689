//! Counting invariants: recursion versus enumeration, layer sums, the
//! Dirichlet-series layer identity, growth bounds at desk scale, and the
//! min/max factor-sum bounds.

use dirichlet_core::factorizations::{
    d_max_k, d_max_upper_bound_exact, d_min_k, d_min_log_bound, d_min_lower_bound,
    enumerate_ordered_factorizations, h_k_tables, h_table, FactorizationCounter, FactorSet,
};
use dirichlet_core::primes::SpfSieve;
use proptest::prelude::*;

fn test_sets() -> Vec<FactorSet> {
    vec![
        FactorSet::all_from_2(),
        FactorSet::odd_from_3(),
        FactorSet::explicit(vec![2, 3, 5]).unwrap(),
    ]
}

#[test]
fn recursion_matches_enumeration_to_3000() {
    for set in test_sets() {
        let mut counter = FactorizationCounter::new(set.clone());
        let table = h_table(3000, &set).unwrap();
        for n in 2..=3000u64 {
            let tuples = enumerate_ordered_factorizations(n, &set, None).unwrap();
            assert_eq!(
                tuples.len() as u64,
                counter.h(n).unwrap(),
                "H({n}) over {}",
                set.label()
            );
            assert_eq!(tuples.len() as u64, table[n as usize]);
            // One walk gives every fixed-length count as well.
            let max_k = tuples.iter().map(|t| t.len()).max().unwrap_or(0) as u32;
            for k in 1..=max_k {
                let by_len = tuples.iter().filter(|t| t.len() as u32 == k).count() as u64;
                assert_eq!(
                    by_len,
                    counter.h_k(n, k).unwrap(),
                    "H_{k}({n}) over {}",
                    set.label()
                );
            }
        }
    }
}

#[test]
fn layer_sum_equals_h_to_1e5() {
    let limit = 100_000u64;
    let sieve = SpfSieve::new(limit);
    for set in test_sets() {
        let table = h_table(limit, &set).unwrap();
        let layers = h_k_tables(limit, 17, &set).unwrap();
        for n in 2..=limit {
            let omega = sieve.factorize(n).big_omega();
            let sum: u64 = (1..=omega)
                .map(|k| layers[(k - 1) as usize][n as usize])
                .sum();
            assert_eq!(sum, table[n as usize], "n = {n} over {}", set.label());
            // Layers past Ω(n) are empty.
            if (omega as usize) < layers.len() {
                assert_eq!(layers[omega as usize][n as usize], 0);
            }
        }
    }
}

/// u64 Dirichlet convolution by a push sieve, independent of the layer
/// recursion.
fn convolve_tables(a: &[u64], b: &[u64]) -> Vec<u64> {
    let limit = a.len() - 1;
    let mut out = vec![0u64; limit + 1];
    for q in 1..=limit {
        if a[q] == 0 {
            continue;
        }
        for m in 1..=limit / q {
            out[q * m] += a[q] * b[m];
        }
    }
    out
}

#[test]
fn layer_tables_factor_as_dirichlet_convolutions() {
    let limit = 10_000u64;
    let set = FactorSet::all_from_2();
    let layers = h_k_tables(limit, 6, &set).unwrap();
    // H_{i+j} = H_i ∗ H_j, cross-checked away from the defining recursion.
    for (i, j) in [(1usize, 2usize), (2, 2), (2, 3), (1, 4)] {
        let conv = convolve_tables(&layers[i - 1], &layers[j - 1]);
        assert_eq!(conv, layers[i + j - 1], "H_{i} * H_{j}");
    }
}

#[test]
fn dirichlet_series_truncation_tightens() {
    // At s = 3 the truncated layer series approaches (ζ_{<=M}(3) - 1)^k
    // from below; the defect at M = 1000 must be smaller than at M = 100.
    let set = FactorSet::all_from_2();
    let layers = h_k_tables(1000, 3, &set).unwrap();
    let s = 3.0f64;
    for k in 1..=3u32 {
        let defect = |m: u64| -> f64 {
            let series: f64 = (2..=m)
                .map(|n| layers[(k - 1) as usize][n as usize] as f64 / (n as f64).powf(s))
                .sum();
            let zeta_head: f64 = (2..=m).map(|n| (n as f64).powf(-s)).sum();
            (zeta_head.powi(k as i32) - series).abs()
        };
        let d100 = defect(100);
        let d1000 = defect(1000);
        if k == 1 {
            // H_1 is the head indicator itself; the two sides coincide.
            assert!(d100 < 1e-15 && d1000 < 1e-15, "k = 1: {d100}, {d1000}");
        } else {
            assert!(
                d1000 < d100,
                "k = {k}: defect {d1000} at M=1000 vs {d100} at M=100"
            );
        }
    }
}

#[test]
fn h_growth_bounds_at_desk_scale() {
    // Strict H(n) < n^ρ and the odd-n variant, 10^4 here; the acceptance
    // suite pushes the same check to 10^6.
    let rho_hi = 1.728_647_239_5f64;
    let eta_hi = 1.377_785_170_5f64;
    let table = h_table(10_000, &FactorSet::all_from_2()).unwrap();
    let odd_table = h_table(9_999, &FactorSet::odd_from_3()).unwrap();
    for n in 2..=10_000u64 {
        let h = table[n as usize] as f64;
        assert!(h < (n as f64).powf(rho_hi) * (1.0 + 1e-9), "n = {n}");
        if n % 2 == 1 {
            assert!(h < (n as f64).powf(eta_hi) * (1.0 + 1e-9), "odd n = {n}");
            // For odd n every factor is odd, so the restricted count is the
            // same number.
            assert_eq!(table[n as usize], odd_table[n as usize]);
        }
    }
}

#[test]
fn h_k_bound_at_desk_scale() {
    let zeta2_minus_1 = std::f64::consts::PI.powi(2) / 6.0 - 1.0;
    let odd_base = 0.75 * std::f64::consts::PI.powi(2) / 6.0 - 1.0;
    let limit = 2000u64;
    let sieve = SpfSieve::new(limit);
    let layers = h_k_tables(limit, 11, &FactorSet::all_from_2()).unwrap();
    for n in 2..=limit {
        let omega = sieve.factorize(n).big_omega();
        for k in 1..=omega {
            let hk = layers[(k - 1) as usize][n as usize] as f64;
            let bound = zeta2_minus_1.powi(k as i32 - 1) * (n as f64).powi(2) / 4.0;
            assert!(hk <= bound * (1.0 + 1e-9), "n = {n}, k = {k}");
            if n % 2 == 1 {
                let odd_bound = odd_base.powi(k as i32 - 1) * (n as f64).powi(2) / 9.0;
                assert!(hk <= odd_bound * (1.0 + 1e-9), "odd n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn d_min_max_bounds_small() {
    let sieve = SpfSieve::new(300);
    for n in 2..=300u64 {
        let omega = sieve.factorize(n).big_omega();
        for k in 1..=(omega + 1) {
            let dmin = d_min_k(n, k).unwrap();
            let dmax = d_max_k(n, k).unwrap();
            assert_eq!(dmin.is_some(), k <= omega, "feasibility at ({n}, {k})");
            assert_eq!(dmin.is_some(), dmax.is_some());
            if let (Some(lo), Some(hi)) = (dmin, dmax) {
                assert!(lo <= hi);
                let lower = d_min_lower_bound(n, k);
                assert!(lo as f64 >= lower * (1.0 - 1e-12), "({n}, {k})");
                assert!(lower >= d_min_log_bound(n) * (1.0 - 1e-12), "({n}, {k})");
                let upper = d_max_upper_bound_exact(n, k);
                assert!(
                    dirichlet_core::arith::rat(hi as i64) <= upper,
                    "({n}, {k})"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_enumeration_is_lexicographic_and_complete(n in 2u64..=1200) {
        let set = FactorSet::all_from_2();
        let tuples = enumerate_ordered_factorizations(n, &set, None).unwrap();
        // Lexicographic emission order, no duplicates.
        prop_assert!(tuples.windows(2).all(|w| w[0] < w[1]));
        for t in &tuples {
            prop_assert_eq!(t.iter().product::<u64>(), n);
            prop_assert!(t.iter().all(|&d| d >= 2));
        }
        let mut counter = FactorizationCounter::new(set);
        prop_assert_eq!(tuples.len() as u64, counter.h(n).unwrap());
    }

    #[test]
    fn prop_layer_sum(n in 2u64..=2000) {
        let set = FactorSet::all_from_2();
        let mut counter = FactorizationCounter::new(set);
        let omega = dirichlet_core::primes::big_omega(n);
        let sum: u64 = (1..=omega).map(|k| counter.h_k(n, k).unwrap()).sum();
        prop_assert_eq!(sum, counter.h(n).unwrap());
    }
}
