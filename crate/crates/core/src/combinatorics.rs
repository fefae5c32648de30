//! Factorials, binomials and the exhaustive enumerators behind the explicit
//! sums: integer partitions as multiplicity vectors, strict compositions
//! (grouped by their multiset of parts) and weak compositions.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{CapKind, Result};

fn factorial_table() -> &'static Mutex<Vec<BigUint>> {
    static TABLE: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigUint::one()]))
}

/// `n!`, memoized across calls.
pub fn factorial(n: usize) -> BigUint {
    let mut table = factorial_table().lock().expect("factorial table poisoned");
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigUint::from(k);
        table.push(next);
    }
    table[n].clone()
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// A partition of `m` recorded by multiplicities: `t[k-1]` parts equal to
/// `k`, so that `sum k * t[k-1] == m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PartitionMultiset {
    multiplicities: Vec<u32>,
}

impl PartitionMultiset {
    /// Returns `None` unless the multiplicities describe a partition of
    /// `multiplicities.len()`.
    pub fn new(multiplicities: Vec<u32>) -> Option<Self> {
        let weight: usize = multiplicities
            .iter()
            .enumerate()
            .map(|(i, &t)| (i + 1) * t as usize)
            .sum();
        (weight == multiplicities.len()).then_some(PartitionMultiset { multiplicities })
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// The `m` this partitions.
    pub fn weight(&self) -> usize {
        self.multiplicities.len()
    }

    /// `t_1 + ... + t_m`.
    pub fn part_count(&self) -> usize {
        self.multiplicities.iter().map(|&t| t as usize).sum()
    }

    /// `(t_1 + ... + t_m)! / (t_1! ... t_m!)`, the number of compositions
    /// with this multiset of parts.
    pub fn multinomial(&self) -> BigUint {
        let denom: BigUint = self
            .multiplicities
            .iter()
            .map(|&t| factorial(t as usize))
            .product();
        factorial(self.part_count()) / denom
    }

    /// `(k, t_k)` pairs with nonzero multiplicity.
    pub fn parts(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &t)| t > 0)
            .map(|(i, &t)| (i + 1, t))
    }
}

fn partition_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<PartitionMultiset>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<PartitionMultiset>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Every partition of `m` as a multiplicity vector, in lexicographic order of
/// `(t_1, ..., t_m)`. Memoized per `m`; `m = 0` yields the single empty
/// partition.
pub fn enumerate_partition_multiplicities(m: usize, caps: &Caps) -> Result<Arc<Vec<PartitionMultiset>>> {
    caps.check(CapKind::Partitions, m)?;
    if let Some(hit) = partition_cache().lock().expect("cache poisoned").get(&m) {
        return Ok(hit.clone());
    }
    let list = Arc::new(generate_partitions(m));
    partition_cache()
        .lock()
        .expect("cache poisoned")
        .insert(m, list.clone());
    Ok(list)
}

fn generate_partitions(m: usize) -> Vec<PartitionMultiset> {
    if m == 0 {
        return vec![PartitionMultiset {
            multiplicities: Vec::new(),
        }];
    }
    let mut out = Vec::new();
    let mut t = vec![0u32; m];
    // remaining[i]: weight still to place at positions i.. (part sizes i+1..)
    let mut remaining = vec![0usize; m + 1];
    remaining[0] = m;
    let mut start = 0;
    loop {
        // Descend with the smallest choice at every free position.
        for i in start..m - 1 {
            t[i] = 0;
            remaining[i + 1] = remaining[i];
        }
        let last = remaining[m - 1];
        if last % m == 0 {
            t[m - 1] = (last / m) as u32;
            out.push(PartitionMultiset {
                multiplicities: t.clone(),
            });
        }
        // Bump the deepest free position that still fits.
        let mut bumped = None;
        for i in (0..m - 1).rev() {
            let k = i + 1;
            if (t[i] as usize + 1) * k <= remaining[i] {
                t[i] += 1;
                remaining[i + 1] = remaining[i] - t[i] as usize * k;
                bumped = Some(i);
                break;
            }
        }
        match bumped {
            Some(i) => start = i + 1,
            None => return out,
        }
    }
}

/// Strict compositions of `n` (ordered tuples of positive parts summing to
/// `n`), one per subset of the `n - 1` cut points, in bitmask order.
#[derive(Debug, Clone)]
pub struct StrictCompositions {
    n: usize,
    mask: u64,
    end: u64,
}

impl StrictCompositions {
    pub fn new(n: usize) -> Self {
        assert!(n < 64, "composition enumeration limited to n < 64");
        let end = if n == 0 { 1 } else { 1u64 << (n - 1) };
        StrictCompositions { n, mask: 0, end }
    }
}

impl Iterator for StrictCompositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.mask >= self.end {
            return None;
        }
        let mask = self.mask;
        self.mask += 1;
        if self.n == 0 {
            return Some(Vec::new());
        }
        let mut parts = Vec::new();
        let mut run = 1;
        for cut in 0..self.n - 1 {
            if mask >> cut & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        Some(parts)
    }
}

/// Distinct part multisets of the strict compositions of some `n`, each
/// with the number of compositions that share it.
pub type CompositionTallies = Arc<Vec<(PartitionMultiset, u64)>>;

fn composition_cache() -> &'static Mutex<HashMap<usize, CompositionTallies>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, CompositionTallies>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Walks every strict composition of `n` and tallies how many share each
/// multiset of parts. Sums over compositions whose summand depends only on
/// the parts (not their order) can then be evaluated once per multiset.
/// Sorted by multiplicity vector; memoized per `n`.
pub fn composition_multiplicity_counts(n: usize, caps: &Caps) -> Result<CompositionTallies> {
    caps.check(CapKind::Compositions, n)?;
    if let Some(hit) = composition_cache().lock().expect("cache poisoned").get(&n) {
        return Ok(hit.clone());
    }
    let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut key = vec![0u32; n];
    for parts in StrictCompositions::new(n) {
        key.iter_mut().for_each(|t| *t = 0);
        for p in parts {
            key[p - 1] += 1;
        }
        *tally.entry(key.clone()).or_insert(0) += 1;
    }
    let mut counts: Vec<(PartitionMultiset, u64)> = tally
        .into_iter()
        .map(|(multiplicities, count)| (PartitionMultiset { multiplicities }, count))
        .collect();
    counts.sort();
    let counts = Arc::new(counts);
    composition_cache()
        .lock()
        .expect("cache poisoned")
        .insert(n, counts.clone());
    Ok(counts)
}

/// Weak compositions of `total` into exactly `parts` non-negative parts, in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct WeakCompositions {
    current: Option<Vec<usize>>,
}

impl WeakCompositions {
    pub fn new(total: usize, parts: usize) -> Self {
        let current = if parts == 0 {
            (total == 0).then(Vec::new)
        } else {
            let mut first = vec![0; parts];
            first[parts - 1] = total;
            Some(first)
        };
        WeakCompositions { current }
    }
}

impl Iterator for WeakCompositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let len = out.len();
        if len >= 2 {
            let mut next = out.clone();
            let mut tail = next[len - 1];
            for j in (0..len - 1).rev() {
                if tail > 0 {
                    next[j] += 1;
                    for slot in next.iter_mut().skip(j + 1) {
                        *slot = 0;
                    }
                    next[len - 1] = tail - 1;
                    self.current = Some(next);
                    break;
                }
                tail += next[j];
            }
        }
        Some(out)
    }
}
