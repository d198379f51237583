//! Integer partitions and Young-diagram combinatorics.
//!
//! Partitions index irreducible representations and conjugacy classes of S_n,
//! and the components of GL(n,q) irreducible families.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::factorial;

/// A weakly decreasing sequence of positive integers.
///
/// Ordering sorts by size first, then reverse-lexicographically on parts, so
/// that partitions of a fixed `n` sort in enumeration order: `(n)` first and
/// `(1,…,1)` last.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1,…,1)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.first_row();
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// `n(λ) = Σ (i−1)·λ_i` with rows indexed from 1.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn sum_of_squares(&self) -> usize {
        self.parts.iter().map(|&p| p * p).sum()
    }

    /// Multiplicity of part `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Hook lengths of every box, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.transpose();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.parts[j] - i - 1);
            }
        }
        out
    }

    /// Partitions obtained by deleting one corner box, in enumeration order.
    pub fn removable(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if self.part(i) > self.part(i + 1) {
                let mut p = self.parts.clone();
                p[i] -= 1;
                if p[i] == 0 {
                    p.pop();
                }
                out.push(Partition { parts: p });
            }
        }
        out.reverse();
        out
    }

    /// Partitions obtained by adding one box at an addable cell, in enumeration order.
    pub fn addable(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut p = self.parts.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(Partition { parts: p });
            }
        }
        out
    }

    /// Number of removable corners.
    pub fn corner_count(&self) -> usize {
        (0..self.parts.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .count()
    }

    /// Dimension of the corresponding irreducible representation of S_{|λ|}.
    pub fn dimension(&self) -> BigUint {
        dimension_sn(self).expect("hook product always divides |λ|!")
    }

    /// Natural log of [`Partition::dimension`], computed in floating point.
    pub fn log_dimension(&self) -> f64 {
        let log_fact: f64 = (2..=self.size()).map(|k| (k as f64).ln()).sum();
        log_fact - self.hooks().iter().map(|&h| (h as f64).ln()).sum::<f64>()
    }

    /// Canonical text form: parts joined by `+`, or `-` for the empty partition.
    pub fn encode(&self) -> String {
        self.to_string()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse(format!("zero part in {s:?}")));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Every partition of `n` exactly once, reverse-lexicographic: `(n)` first.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size `0..=max_size`, grouped by size, each group in enumeration order.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(enumerate_partitions).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub transpose: Partition,
    pub n_stat: usize,
    /// Hook lengths sorted in decreasing order.
    pub hooks: Vec<usize>,
}

pub fn partition_stats(lambda: &Partition) -> PartitionStats {
    let mut hooks = lambda.hooks();
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    PartitionStats {
        transpose: lambda.transpose(),
        n_stat: lambda.n_stat(),
        hooks,
    }
}

/// Hook-length dimension `|λ|! / Π h(b)`.
pub fn dimension_sn(lambda: &Partition) -> Result<BigUint> {
    let hook_product = lambda
        .hooks()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    let (quot, rem) = factorial(lambda.size()).div_rem(&hook_product);
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "hook product of {lambda} does not divide |λ|!"
        )));
    }
    Ok(quot)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerMoves {
    pub removable: Vec<Partition>,
    pub addable: Vec<Partition>,
}

pub fn corner_moves(lambda: &Partition) -> CornerMoves {
    CornerMoves {
        removable: lambda.removable(),
        addable: lambda.addable(),
    }
}
