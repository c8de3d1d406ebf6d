//! Integer partitions, multi-partitions and finitely supported sequences,
//! with the statistics `|·|`, `d(·)` and the weight `κ_q`.
//!
//! Enumerators are lazy iterators. Partitions of `k` come out with parts in
//! descending order, starting from `(k)` and ending with `(1,…,1)`.
//! Multi-partitions of total weight `k` are ordered by their component
//! weights (heaviest first component first), then component by component
//! with the last component varying fastest.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::poly::QPoly;

/// A partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|p|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// `d(p)`: the number of distinct part sizes.
    pub fn distinct_sizes(&self) -> usize {
        let mut n = 0;
        let mut prev = 0;
        for &p in &self.parts {
            if p != prev {
                n += 1;
                prev = p;
            }
        }
        n
    }

    /// Multiplicity `m_r` of the part size `r`.
    pub fn multiplicity(&self, r: u32) -> usize {
        self.parts.iter().filter(|&&p| p == r).count()
    }

    /// `(size, m_size)` pairs for every part size present, ascending.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((r, m)) if *r == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// `κ_q(p)`: `(-u)^{#parts}` when all parts are distinct, else `0`.
    pub fn kappa_q(&self) -> QPoly {
        if !self.has_distinct_parts() {
            return QPoly::zero();
        }
        let n = self.parts.len();
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        QPoly::monomial(sign, n)
    }

    /// `(1-u)^{d(p)}`.
    pub fn d_weight(&self) -> QPoly {
        QPoly::one_minus_u_pow(self.distinct_sizes() as u32)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An `n`-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition { components }
    }

    pub fn empty(n: usize) -> Self {
        MultiPartition {
            components: vec![Partition::empty(); n],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.components.iter().map(Partition::num_parts).sum()
    }

    /// `d(c₀) = Σᵢ d(ρ⁽ⁱ⁾)`.
    pub fn distinct_sizes(&self) -> usize {
        self.components.iter().map(Partition::distinct_sizes).sum()
    }

    /// `κ_q(c₀) = Πᵢ κ_q(ρ⁽ⁱ⁾)`.
    pub fn kappa_q(&self) -> QPoly {
        self.components
            .iter()
            .fold(QPoly::one(), |acc, p| &acc * &p.kappa_q())
    }

    pub fn d_weight(&self) -> QPoly {
        QPoly::one_minus_u_pow(self.distinct_sizes() as u32)
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A finitely supported map from slot indices to non-negative counts.
///
/// Slots are positive for sequences indexed like `(c₁, c₂, …)` and
/// non-positive for `(c₀, c₋₁, …)`; the type itself does not care.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SupportSeq {
    entries: BTreeMap<i64, u64>,
}

impl SupportSeq {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, u64)>>(pairs: I) -> Self {
        let mut s = SupportSeq::new();
        for (k, c) in pairs {
            s.set(k, c);
        }
        s
    }

    pub fn set(&mut self, slot: i64, count: u64) {
        if count == 0 {
            self.entries.remove(&slot);
        } else {
            self.entries.insert(slot, count);
        }
    }

    pub fn get(&self, slot: i64) -> u64 {
        self.entries.get(&slot).copied().unwrap_or(0)
    }

    /// Nonzero `(slot, count)` pairs in slot order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.entries.iter().map(|(&k, &c)| (k, c))
    }

    /// `d(c)`: number of nonzero entries.
    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    /// `|c|`: sum of entries.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// Iterator over the partitions of a fixed `k`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

/// All partitions of `k`, each exactly once. `k = 0` yields the empty
/// partition.
pub fn enumerate_partitions(k: u32) -> Partitions {
    Partitions {
        current: Some(if k == 0 { Vec::new() } else { vec![k] }),
    }
}

fn next_partition(parts: &mut Vec<u32>) -> bool {
    let mut rem: u32 = 0;
    while parts.last() == Some(&1) {
        parts.pop();
        rem += 1;
    }
    let Some(last) = parts.pop() else {
        return false;
    };
    let x = last - 1;
    rem += 1;
    parts.push(x);
    while rem >= x {
        parts.push(x);
        rem -= x;
    }
    if rem > 0 {
        parts.push(rem);
    }
    true
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let mut nxt = cur.clone();
        if next_partition(&mut nxt) {
            self.current = Some(nxt);
        }
        Some(Partition { parts: cur })
    }
}

/// Iterator over the `n`-component multi-partitions of total weight `k`.
#[derive(Clone, Debug)]
pub struct MultiPartitions {
    weights: Vec<u32>,
    parts: Vec<Vec<u32>>,
    done: bool,
}

/// All multi-partitions with `n ≥ 1` components and total weight `k`.
pub fn enumerate_multipartitions(n: usize, k: u32) -> MultiPartitions {
    assert!(n >= 1, "multi-partitions need at least one component");
    let mut weights = vec![0; n];
    weights[0] = k;
    let parts = weights.iter().map(|&w| first_partition(w)).collect();
    MultiPartitions {
        weights,
        parts,
        done: false,
    }
}

fn first_partition(w: u32) -> Vec<u32> {
    if w == 0 {
        Vec::new()
    } else {
        vec![w]
    }
}

/// Next composition in decreasing lexicographic order.
fn next_composition(w: &mut [u32]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let Some(j) = (0..n - 1).rev().find(|&j| w[j] > 0) else {
        return false;
    };
    let tail: u32 = w[j + 1..].iter().sum();
    w[j] -= 1;
    for x in &mut w[j + 1..] {
        *x = 0;
    }
    w[j + 1] = tail + 1;
    true
}

impl Iterator for MultiPartitions {
    type Item = MultiPartition;

    fn next(&mut self) -> Option<MultiPartition> {
        if self.done {
            return None;
        }
        let out = MultiPartition {
            components: self
                .parts
                .iter()
                .map(|p| Partition { parts: p.clone() })
                .collect(),
        };
        let n = self.weights.len();
        let mut advanced = false;
        for i in (0..n).rev() {
            if next_partition(&mut self.parts[i]) {
                for j in i + 1..n {
                    self.parts[j] = first_partition(self.weights[j]);
                }
                advanced = true;
                break;
            }
            // next_partition leaves the vector consumed on failure
            self.parts[i] = first_partition(self.weights[i]);
        }
        if !advanced {
            if next_composition(&mut self.weights) {
                self.parts = self.weights.iter().map(|&w| first_partition(w)).collect();
            } else {
                self.done = true;
            }
        }
        Some(out)
    }
}

/// Per-weight sums over single partitions, obtained by walking every
/// partition of every weight `0..=max_weight`:
/// `kappa[w] = Σ_{|p|=w} κ_q(p)` and `d_weight[w] = Σ_{|p|=w} (1-u)^{d(p)}`.
#[derive(Clone, Debug)]
pub struct PartitionSums {
    pub kappa: Vec<QPoly>,
    pub d_weight: Vec<QPoly>,
    pub count: Vec<BigInt>,
}

pub fn partition_sums(max_weight: u32) -> PartitionSums {
    let mut kappa = Vec::with_capacity(max_weight as usize + 1);
    let mut d_weight = Vec::with_capacity(max_weight as usize + 1);
    let mut count = Vec::with_capacity(max_weight as usize + 1);
    for w in 0..=max_weight {
        // tally integer statistics first, then form the polynomials once
        let mut by_parts: BTreeMap<usize, i64> = BTreeMap::new();
        let mut by_d: BTreeMap<usize, u64> = BTreeMap::new();
        let mut total: u64 = 0;
        for p in enumerate_partitions(w) {
            total += 1;
            *by_d.entry(p.distinct_sizes()).or_default() += 1;
            if p.has_distinct_parts() {
                *by_parts.entry(p.num_parts()).or_default() += 1;
            }
        }
        let mut kq = QPoly::zero();
        for (parts, c) in by_parts {
            let sign = if parts % 2 == 0 { c } else { -c };
            kq += &QPoly::monomial(sign, parts);
        }
        let mut dq = QPoly::zero();
        for (d, c) in by_d {
            dq.add_scaled(&QPoly::one_minus_u_pow(d as u32), &BigInt::from(c));
        }
        kappa.push(kq);
        d_weight.push(dq);
        count.push(BigInt::from(total));
    }
    PartitionSums {
        kappa,
        d_weight,
        count,
    }
}
