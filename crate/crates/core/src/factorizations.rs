//! Ordered factorizations over a factor set P: enumeration, the counts
//! H(n, P) and H_k(n, P), integer partitions with multinomial weights, and
//! the exact min/max factor-sum extrema over k-factorizations.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigUint, One, Zero};

use crate::arith::{rat_pow_u64, Rat};
use crate::error::{Error, Result};
use crate::primes::factorize;

/// A factor universe P ⊆ {2, 3, ...} from which ordered-factorization
/// factors are drawn.
#[derive(Clone)]
pub enum FactorSet {
    /// All integers >= 2.
    AllFrom2,
    /// All odd integers >= 3.
    OddFrom3,
    /// An explicit finite set, sorted and deduplicated.
    Explicit(Vec<u64>),
    /// Membership by predicate, defined only up to `horizon`. Queries past
    /// the horizon fail loudly.
    Predicate {
        pred: Arc<dyn Fn(u64) -> bool + Send + Sync>,
        horizon: u64,
        min_element: u64,
    },
}

impl fmt::Debug for FactorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorSet::AllFrom2 => write!(f, "AllFrom2"),
            FactorSet::OddFrom3 => write!(f, "OddFrom3"),
            FactorSet::Explicit(v) => write!(f, "Explicit({v:?})"),
            FactorSet::Predicate { horizon, .. } => {
                write!(f, "Predicate {{ horizon: {horizon} }}")
            }
        }
    }
}

impl FactorSet {
    pub fn all_from_2() -> Self {
        FactorSet::AllFrom2
    }

    pub fn odd_from_3() -> Self {
        FactorSet::OddFrom3
    }

    /// Builds an explicit finite set; members below 2 or an empty list are
    /// rejected.
    pub fn explicit(mut members: Vec<u64>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() || members[0] < 2 {
            return Err(Error::InvalidFactorSet);
        }
        Ok(FactorSet::Explicit(members))
    }

    /// Builds a predicate-backed set truncated at `horizon`; rejected when
    /// no member exists at or below the horizon.
    pub fn predicate(
        horizon: u64,
        pred: impl Fn(u64) -> bool + Send + Sync + 'static,
    ) -> Result<Self> {
        let min_element = (2..=horizon).find(|&m| pred(m)).ok_or(Error::InvalidFactorSet)?;
        Ok(FactorSet::Predicate {
            pred: Arc::new(pred),
            horizon,
            min_element,
        })
    }

    /// Membership test. Errors past the horizon of a predicate set.
    pub fn contains(&self, m: u64) -> Result<bool> {
        match self {
            FactorSet::AllFrom2 => Ok(m >= 2),
            FactorSet::OddFrom3 => Ok(m >= 3 && !m.is_multiple_of(2)),
            FactorSet::Explicit(v) => Ok(v.binary_search(&m).is_ok()),
            FactorSet::Predicate { pred, horizon, .. } => {
                if m > *horizon {
                    Err(Error::HorizonExceeded {
                        horizon: *horizon,
                        n: m,
                    })
                } else {
                    Ok(m >= 2 && pred(m))
                }
            }
        }
    }

    /// ϱ, the least member of the set.
    pub fn min_element(&self) -> u64 {
        match self {
            FactorSet::AllFrom2 => 2,
            FactorSet::OddFrom3 => 3,
            FactorSet::Explicit(v) => v[0],
            FactorSet::Predicate { min_element, .. } => *min_element,
        }
    }

    /// Abscissa of convergence of ζ_P: 1 for the built-in infinite sets,
    /// -∞ for finite sets, unknown (None) for predicate sets.
    pub fn convergence_abscissa(&self) -> Option<f64> {
        match self {
            FactorSet::AllFrom2 | FactorSet::OddFrom3 => Some(1.0),
            FactorSet::Explicit(_) => Some(f64::NEG_INFINITY),
            FactorSet::Predicate { .. } => None,
        }
    }

    /// Ensures every membership query at or below n is answerable.
    fn check_horizon(&self, n: u64) -> Result<()> {
        if let FactorSet::Predicate { horizon, .. } = self {
            if n > *horizon {
                return Err(Error::HorizonExceeded {
                    horizon: *horizon,
                    n,
                });
            }
        }
        Ok(())
    }

    /// Iterates the members m <= x in ascending order. The caller must have
    /// verified the horizon for predicate sets.
    fn members_upto(&self, x: u64) -> Box<dyn Iterator<Item = u64> + '_> {
        match self {
            FactorSet::AllFrom2 => Box::new(2..=x),
            FactorSet::OddFrom3 => Box::new((3..=x).step_by(2)),
            FactorSet::Explicit(v) => {
                let end = v.partition_point(|&m| m <= x);
                Box::new(v[..end].iter().copied())
            }
            FactorSet::Predicate { pred, .. } => Box::new((2..=x).filter(move |&m| pred(m))),
        }
    }

    /// Short label used in reports and CLI output.
    pub fn label(&self) -> String {
        match self {
            FactorSet::AllFrom2 => "all2".into(),
            FactorSet::OddFrom3 => "odd3".into(),
            FactorSet::Explicit(v) => {
                let items: Vec<String> = v.iter().map(|m| m.to_string()).collect();
                format!("{{{}}}", items.join(","))
            }
            FactorSet::Predicate { horizon, .. } => format!("predicate(horizon={horizon})"),
        }
    }
}

/// One ordered factorization (d_1, ..., d_k) with product n.
pub type OrderedFactorization = Vec<u64>;

/// Default ceiling on visited factor prefixes during enumeration.
pub const DEFAULT_ENUMERATION_CEILING: u64 = 10_000_000;

/// Enumerates the ordered factorizations of n over P, all lengths or
/// exactly `k` factors, in lexicographic tuple order.
pub fn enumerate_ordered_factorizations(
    n: u64,
    set: &FactorSet,
    k: Option<u32>,
) -> Result<Vec<OrderedFactorization>> {
    enumerate_with_ceiling(n, set, k, DEFAULT_ENUMERATION_CEILING)
}

/// As [`enumerate_ordered_factorizations`] with an explicit ceiling.
pub fn enumerate_with_ceiling(
    n: u64,
    set: &FactorSet,
    k: Option<u32>,
    ceiling: u64,
) -> Result<Vec<OrderedFactorization>> {
    assert!(n >= 2, "enumeration is defined for n >= 2");
    set.check_horizon(n)?;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    let mut visited = 0u64;
    descend(n, set, k, ceiling, n, &mut prefix, &mut visited, &mut out)?;
    return Ok(out);

    #[allow(clippy::too_many_arguments)]
    fn descend(
        remaining: u64,
        set: &FactorSet,
        k: Option<u32>,
        ceiling: u64,
        n: u64,
        prefix: &mut Vec<u64>,
        visited: &mut u64,
        out: &mut Vec<OrderedFactorization>,
    ) -> Result<()> {
        for d in factorize(remaining).divisors() {
            if d < 2 || !set.contains(d)? {
                continue;
            }
            *visited += 1;
            if *visited > ceiling {
                return Err(Error::EnumerationCeiling { n, ceiling });
            }
            if let Some(k) = k {
                if prefix.len() as u32 + 1 > k {
                    continue;
                }
            }
            prefix.push(d);
            if d == remaining {
                if k.is_none() || prefix.len() as u32 == k.unwrap() {
                    out.push(prefix.clone());
                }
            } else {
                descend(remaining / d, set, k, ceiling, n, prefix, visited, out)?;
            }
            prefix.pop();
        }
        Ok(())
    }
}

/// Memoizing counter for H(n, P) and H_k(n, P) over one factor set.
///
/// Counts are checked 64-bit integers; overflow is reported, never wrapped.
/// The memo is confined to this value, so clone one counter per worker for
/// parallel use.
pub struct FactorizationCounter {
    set: FactorSet,
    memo_h: HashMap<u64, u64>,
    memo_hk: HashMap<(u64, u32), u64>,
}

impl FactorizationCounter {
    pub fn new(set: FactorSet) -> Self {
        FactorizationCounter {
            set,
            memo_h: HashMap::new(),
            memo_hk: HashMap::new(),
        }
    }

    pub fn set(&self) -> &FactorSet {
        &self.set
    }

    /// H(n, P) via the divisor recursion H(1) = 1,
    /// H(n) = Σ_{d|n, d∈P} H(n/d).
    pub fn h(&mut self, n: u64) -> Result<u64> {
        assert!(n >= 1);
        self.set.check_horizon(n)?;
        self.h_inner(n)
    }

    fn h_inner(&mut self, n: u64) -> Result<u64> {
        if n == 1 {
            return Ok(1);
        }
        if let Some(&v) = self.memo_h.get(&n) {
            return Ok(v);
        }
        let mut acc = 0u64;
        for d in factorize(n).divisors() {
            if d < 2 || !self.set.contains(d)? {
                continue;
            }
            let sub = self.h_inner(n / d)?;
            acc = acc
                .checked_add(sub)
                .ok_or(Error::CounterOverflow { n })?;
        }
        self.memo_h.insert(n, acc);
        Ok(acc)
    }

    /// H_k(n, P) via H_1(n) = [n ∈ P] and
    /// H_k(n) = Σ_{d|n, d∈P} H_{k-1}(n/d).
    pub fn h_k(&mut self, n: u64, k: u32) -> Result<u64> {
        assert!(n >= 1 && k >= 1);
        self.set.check_horizon(n)?;
        self.h_k_inner(n, k)
    }

    fn h_k_inner(&mut self, n: u64, k: u32) -> Result<u64> {
        if k == 1 {
            return Ok(if n >= 2 && self.set.contains(n)? { 1 } else { 0 });
        }
        if let Some(&v) = self.memo_hk.get(&(n, k)) {
            return Ok(v);
        }
        let mut acc = 0u64;
        for d in factorize(n).divisors() {
            if d < 2 || !self.set.contains(d)? {
                continue;
            }
            let sub = self.h_k_inner(n / d, k - 1)?;
            acc = acc
                .checked_add(sub)
                .ok_or(Error::CounterOverflow { n })?;
        }
        self.memo_hk.insert((n, k), acc);
        Ok(acc)
    }
}

/// One-shot H(n, P).
pub fn h(n: u64, set: &FactorSet) -> Result<u64> {
    FactorizationCounter::new(set.clone()).h(n)
}

/// One-shot H_k(n, P).
pub fn h_k(n: u64, k: u32, set: &FactorSet) -> Result<u64> {
    FactorizationCounter::new(set.clone()).h_k(n, k)
}

/// Table of H(n, P) for 0 <= n <= limit (index 0 unused, H(1) = 1),
/// computed by a push-style divisor sieve in O(limit · log limit).
pub fn h_table(limit: u64, set: &FactorSet) -> Result<Vec<u64>> {
    assert!(limit >= 1);
    set.check_horizon(limit)?;
    let lim = limit as usize;
    let mut table = vec![0u64; lim + 1];
    table[1] = 1;
    for q in 1..=lim {
        let hq = table[q];
        if hq == 0 {
            continue;
        }
        for d in set.members_upto(limit / q as u64) {
            let idx = q * d as usize;
            table[idx] = table[idx]
                .checked_add(hq)
                .ok_or(Error::CounterOverflow { n: idx as u64 })?;
        }
    }
    Ok(table)
}

/// Layer tables `out[i][n] = H_{i+1}(n, P)` for k = 1..=max_k, built by
/// repeated Dirichlet convolution with the indicator layer H_1.
pub fn h_k_tables(limit: u64, max_k: u32, set: &FactorSet) -> Result<Vec<Vec<u64>>> {
    assert!(limit >= 1 && max_k >= 1);
    set.check_horizon(limit)?;
    let lim = limit as usize;
    let mut h1 = vec![0u64; lim + 1];
    for m in set.members_upto(limit) {
        h1[m as usize] = 1;
    }
    let mut layers = vec![h1];
    for _ in 2..=max_k {
        let prev = layers.last().unwrap();
        let mut next = vec![0u64; lim + 1];
        #[allow(clippy::needless_range_loop)]
        for q in 1..=lim {
            let hq = prev[q];
            if hq == 0 {
                continue;
            }
            for d in set.members_upto(limit / q as u64) {
                let idx = q * d as usize;
                next[idx] = next[idx]
                    .checked_add(hq)
                    .ok_or(Error::CounterOverflow { n: idx as u64 })?;
            }
        }
        layers.push(next);
    }
    Ok(layers)
}

/// Practical ceiling on partition sizes.
pub const PARTITION_CEILING: u32 = 60;

/// An integer partition in decreasing-part canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Run lengths l_1, ..., l_m of equal parts; they sum to the number of
    /// parts.
    pub fn block_multiplicities(&self) -> Vec<u32> {
        let mut blocks = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i + 1;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            blocks.push((j - i) as u32);
            i = j;
        }
        blocks
    }
}

/// All partitions of m in decreasing-part form, ordered with larger leading
/// parts first: 𝔓(5) = (5), (4,1), (3,2), (3,1,1), (2,2,1), (2,1,1,1),
/// (1,1,1,1,1).
pub fn partitions(m: u32) -> Result<Vec<Partition>> {
    if !(1..=PARTITION_CEILING).contains(&m) {
        return Err(Error::PartitionCeiling {
            m,
            ceiling: PARTITION_CEILING,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(m, m, &mut current, &mut out);
    return Ok(out);

    fn descend(rest: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for part in (1..=rest.min(max_part)).rev() {
            current.push(part);
            descend(rest - part, part, current, out);
            current.pop();
        }
    }
}

/// Multinomial coefficient (Σ groups)! / Π groups_i!.
pub fn multinomial(groups: &[u32]) -> BigUint {
    let total: u32 = groups.iter().sum();
    let mut num = BigUint::one();
    for i in 2..=total {
        num *= BigUint::from(i);
    }
    let mut den = BigUint::one();
    for &g in groups {
        for i in 2..=g {
            den *= BigUint::from(i);
        }
    }
    num / den
}

/// Σ over 𝔓(k) of multinomial(l; l_1,...,l_m) · A^l, which collapses to
/// A (A+1)^{k-1} by the compositions-of-k identity.
pub fn partition_multinomial_sum(a: &Rat, k: u32) -> Result<Rat> {
    let mut acc = Rat::zero();
    for part in partitions(k)? {
        let l = part.parts().len() as u64;
        let weight = Rat::from_integer(BigInt::from(multinomial(&part.block_multiplicities())));
        acc += weight * rat_pow_u64(a, l);
    }
    Ok(acc)
}

/// Exact minimum of d_1 + ... + d_k over ordered factorizations of n into
/// exactly k integer factors >= 2; `None` encodes the +∞ sentinel for an
/// empty feasible set.
pub fn d_min_k(n: u64, k: u32) -> Result<Option<u64>> {
    extremal_factor_sum(n, k, false)
}

/// Exact maximum of the factor sum; `None` encodes the -∞ sentinel.
pub fn d_max_k(n: u64, k: u32) -> Result<Option<u64>> {
    extremal_factor_sum(n, k, true)
}

fn extremal_factor_sum(n: u64, k: u32, maximize: bool) -> Result<Option<u64>> {
    assert!(n >= 2 && k >= 1);
    let mut best: Option<u64> = None;
    let mut visited = 0u64;
    // Order is irrelevant to the sum, so search non-decreasing factor
    // multisets only.
    descend(n, k, 2, 0, maximize, &mut best, &mut visited, n)?;
    return Ok(best);

    #[allow(clippy::too_many_arguments)]
    fn descend(
        remaining: u64,
        slots: u32,
        min_factor: u64,
        sum: u64,
        maximize: bool,
        best: &mut Option<u64>,
        visited: &mut u64,
        n: u64,
    ) -> Result<()> {
        *visited += 1;
        if *visited > DEFAULT_ENUMERATION_CEILING {
            return Err(Error::EnumerationCeiling {
                n,
                ceiling: DEFAULT_ENUMERATION_CEILING,
            });
        }
        if slots == 1 {
            if remaining >= min_factor {
                let total = sum + remaining;
                *best = Some(match *best {
                    None => total,
                    Some(b) if maximize => b.max(total),
                    Some(b) => b.min(total),
                });
            }
            return Ok(());
        }
        for d in factorize(remaining).divisors() {
            if d < min_factor {
                continue;
            }
            // Factors are non-decreasing, so d^slots must not exceed the
            // remaining product.
            if d.checked_pow(slots).is_none_or(|p| p > remaining) {
                break;
            }
            descend(remaining / d, slots - 1, d, sum + d, maximize, best, visited, n)?;
        }
        Ok(())
    }
}

/// Lower bound k · n^{1/k} for the minimal factor sum.
pub fn d_min_lower_bound(n: u64, k: u32) -> f64 {
    k as f64 * (n as f64).powf(1.0 / k as f64)
}

/// The k-independent relaxation e · ln n of the minimal-sum bound.
pub fn d_min_log_bound(n: u64) -> f64 {
    std::f64::consts::E * (n as f64).ln()
}

/// Upper bound 2(k-1) + n / 2^{k-1} for the maximal factor sum.
pub fn d_max_upper_bound(n: u64, k: u32) -> f64 {
    2.0 * (k as f64 - 1.0) + n as f64 / 2f64.powi(k as i32 - 1)
}

/// Exact dyadic-rational form of [`d_max_upper_bound`].
pub fn d_max_upper_bound_exact(n: u64, k: u32) -> Rat {
    let two_pow = rat_pow_u64(&Rat::from_integer(BigInt::from(2)), (k - 1) as u64);
    Rat::from_integer(BigInt::from(2 * (k as u64 - 1)))
        + Rat::from_integer(BigInt::from(n)) / two_pow
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_n12_lexicographic() {
        let tuples = enumerate_ordered_factorizations(12, &FactorSet::all_from_2(), None).unwrap();
        let expected: Vec<Vec<u64>> = vec![
            vec![2, 2, 3],
            vec![2, 3, 2],
            vec![2, 6],
            vec![3, 2, 2],
            vec![3, 4],
            vec![4, 3],
            vec![6, 2],
            vec![12],
        ];
        assert_eq!(tuples, expected);
    }

    #[test]
    fn enumeration_edge_cases() {
        // 8 has no factorization into odd factors >= 3.
        assert!(enumerate_ordered_factorizations(8, &FactorSet::odd_from_3(), None)
            .unwrap()
            .is_empty());
        // A prime in the set factors only as itself.
        assert_eq!(
            enumerate_ordered_factorizations(7, &FactorSet::all_from_2(), None).unwrap(),
            vec![vec![7]]
        );
        // Fixed length k.
        let pairs = enumerate_ordered_factorizations(12, &FactorSet::all_from_2(), Some(2)).unwrap();
        assert_eq!(pairs, vec![vec![2, 6], vec![3, 4], vec![4, 3], vec![6, 2]]);
    }

    #[test]
    fn h_examples() {
        let all2 = FactorSet::all_from_2();
        assert_eq!(h(12, &all2).unwrap(), 8);
        assert_eq!(h(64, &all2).unwrap(), 32);
        assert_eq!(h(1, &all2).unwrap(), 1);
        // Oracle-derived: the 8 odd-factor tuples of 45 are
        // (45),(3,15),(15,3),(5,9),(9,5),(3,3,5),(3,5,3),(5,3,3).
        let odd = FactorSet::odd_from_3();
        assert_eq!(h(45, &odd).unwrap(), 8);
        assert_eq!(
            enumerate_ordered_factorizations(45, &odd, None).unwrap().len(),
            8
        );
    }

    #[test]
    fn h_k_examples() {
        let all2 = FactorSet::all_from_2();
        // H_1 is the membership indicator.
        assert_eq!(h_k(12, 1, &all2).unwrap(), 1);
        assert_eq!(h_k(12, 1, &FactorSet::explicit(vec![2, 3]).unwrap()).unwrap(), 0);
        assert_eq!(h_k(12, 2, &all2).unwrap(), 4);
        assert_eq!(h_k(12, 3, &all2).unwrap(), 3);
        // Beyond Ω(n) there is nothing to count.
        assert_eq!(h_k(12, 4, &all2).unwrap(), 0);
    }

    #[test]
    fn tables_match_counters() {
        for set in [
            FactorSet::all_from_2(),
            FactorSet::odd_from_3(),
            FactorSet::explicit(vec![2, 3, 5]).unwrap(),
        ] {
            let table = h_table(300, &set).unwrap();
            let mut counter = FactorizationCounter::new(set.clone());
            for n in 1..=300u64 {
                assert_eq!(table[n as usize], counter.h(n).unwrap(), "n = {n}");
            }
            let layers = h_k_tables(300, 8, &set).unwrap();
            let mut counter = FactorizationCounter::new(set.clone());
            for n in 2..=300u64 {
                for k in 1..=8u32 {
                    assert_eq!(
                        layers[(k - 1) as usize][n as usize],
                        counter.h_k(n, k).unwrap(),
                        "n = {n}, k = {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        // H(2^40 · 3^12) is about 1.2e24, far past the u64 range.
        let n = (1u64 << 40) * 3u64.pow(12);
        let err = h(n, &FactorSet::all_from_2()).unwrap_err();
        assert!(matches!(err, Error::CounterOverflow { .. }));
    }

    #[test]
    fn horizon_is_enforced() {
        let set = FactorSet::predicate(30, |m| m % 2 == 0).unwrap();
        assert_eq!(set.min_element(), 2);
        assert!(h(24, &set).is_ok());
        assert!(matches!(
            h(31, &set),
            Err(Error::HorizonExceeded { horizon: 30, n: 31 })
        ));
        assert!(matches!(
            enumerate_ordered_factorizations(64, &set, None),
            Err(Error::HorizonExceeded { .. })
        ));
    }

    #[test]
    fn explicit_set_validation() {
        assert!(FactorSet::explicit(vec![]).is_err());
        assert!(FactorSet::explicit(vec![1, 2]).is_err());
        let set = FactorSet::explicit(vec![5, 3, 3, 2]).unwrap();
        assert_eq!(set.min_element(), 2);
        assert_eq!(set.label(), "{2,3,5}");
    }

    #[test]
    fn partitions_of_five_match_canonical_listing() {
        let parts = partitions(5).unwrap();
        let listed: Vec<Vec<u32>> = parts.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            listed,
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1],
            ]
        );
        assert_eq!(partitions(1).unwrap().len(), 1);
        assert_eq!(partitions(10).unwrap().len(), 42);
        assert!(partitions(61).is_err());
    }

    #[test]
    fn block_multiplicities() {
        let parts = partitions(5).unwrap();
        let blocks: Vec<Vec<u32>> = parts.iter().map(|p| p.block_multiplicities()).collect();
        assert_eq!(
            blocks,
            vec![
                vec![1],
                vec![1, 1],
                vec![1, 1],
                vec![1, 2],
                vec![2, 1],
                vec![1, 3],
                vec![5],
            ]
        );
    }

    #[test]
    fn multinomial_sum_closed_form() {
        use crate::arith::{rat, rat_frac};
        assert_eq!(partition_multinomial_sum(&rat(1), 3).unwrap(), rat(4));
        assert_eq!(partition_multinomial_sum(&rat(2), 4).unwrap(), rat(54));
        assert_eq!(
            partition_multinomial_sum(&rat_frac(1, 2), 1).unwrap(),
            rat_frac(1, 2)
        );
    }

    #[test]
    fn d_min_max_examples() {
        assert_eq!(d_min_k(12, 2).unwrap(), Some(7));
        assert_eq!(d_max_k(12, 2).unwrap(), Some(8));
        // n = 2^k: the minimum is 2k.
        for k in 1..=10u32 {
            assert_eq!(d_min_k(1 << k, k).unwrap(), Some(2 * k as u64));
        }
        // Infeasible: 6 has only Ω = 2 factors.
        assert_eq!(d_min_k(6, 3).unwrap(), None);
        assert_eq!(d_max_k(6, 3).unwrap(), None);
    }

    #[test]
    fn d_bounds_small_checks() {
        assert!(d_min_lower_bound(12, 2) <= 7.0 + 1e-12);
        assert!((d_max_upper_bound(12, 2) - 8.0).abs() < 1e-12);
        assert_eq!(d_min_log_bound(1), 0.0);
        let exact = d_max_upper_bound_exact(12, 2);
        assert_eq!(exact, crate::arith::rat(8));
    }
}
