//! Conjugacy classes of S_n, fixed-point statistics, and irreducible
//! characters via the Murnaghan–Nakayama rule.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{binomial, factorial};
use crate::partition::{enumerate_partitions, Partition};

/// Default largest `n` for which full character tables are built.
pub const EXACT_TABLE_LIMIT: usize = 12;

/// A conjugacy class of S_n, labelled by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CycleType {
    pub cycle_lengths: Partition,
    #[serde(serialize_with = "crate::serde_util::biguint_str")]
    pub class_size: BigUint,
    pub fixed_points: usize,
}

impl CycleType {
    pub fn new(cycle_lengths: Partition) -> Self {
        let n = cycle_lengths.size();
        let mut centralizer = BigUint::one();
        for k in 1..=cycle_lengths.first_row() {
            let m = cycle_lengths.multiplicity(k);
            centralizer *= num_traits::pow(BigUint::from(k), m) * factorial(m);
        }
        let fixed_points = cycle_lengths.multiplicity(1);
        CycleType {
            class_size: factorial(n) / centralizer,
            fixed_points,
            cycle_lengths,
        }
    }

    pub fn n(&self) -> usize {
        self.cycle_lengths.size()
    }

    pub fn is_identity(&self) -> bool {
        self.fixed_points == self.n()
    }

    /// Sign of any permutation in the class.
    pub fn sign(&self) -> i64 {
        if (self.n() - self.cycle_lengths.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The class of transpositions in S_n (`n ≥ 2`).
    pub fn transpositions(n: usize) -> Self {
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        CycleType::new(Partition::from_parts_unchecked(parts))
    }
}

/// One class per partition of `n`, in partition enumeration order.
pub fn enumerate_classes(n: usize) -> Vec<CycleType> {
    enumerate_partitions(n)
        .into_iter()
        .map(CycleType::new)
        .collect()
}

type Memo = HashMap<(Vec<usize>, Vec<usize>), i128>;

/// Character value via Murnaghan–Nakayama, stripping the largest cycle first.
pub fn mn_character(lambda: &Partition, class: &CycleType) -> Result<i64> {
    if lambda.size() != class.n() {
        return Err(Error::SizeMismatch {
            expected: class.n(),
            actual: lambda.size(),
        });
    }
    let mut memo = Memo::new();
    let v = mn_rec(lambda.parts(), class.cycle_lengths.parts(), &mut memo);
    i64::try_from(v).map_err(|_| Error::Internal("character value overflow".into()))
}

fn mn_rec(shape: &[usize], cycles: &[usize], memo: &mut Memo) -> i128 {
    let Some((&k, rest)) = cycles.split_first() else {
        return if shape.is_empty() { 1 } else { 0 };
    };
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // Rim hooks of length k correspond to moving a bead b → b−k on the abacus.
    let len = shape.len();
    let betas: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = 0i128;
    for (i, &b) in betas.iter().enumerate() {
        if b < k || betas.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = betas.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = betas.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mut new_shape: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .collect();
        while new_shape.last() == Some(&0) {
            new_shape.pop();
        }
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&new_shape, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Full character table of S_n with rows indexed by irreducibles and columns by classes.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub classes: Vec<CycleType>,
    /// `values[row][col] = χ^{partitions[row]}(classes[col])`.
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn value(&self, irrep: usize, class: usize) -> i64 {
        self.values[irrep][class]
    }

    pub fn identity_class(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn class_index(&self, cycle_type: &Partition) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| &c.cycle_lengths == cycle_type)
    }

    /// `Σ_C |C| χ^λ(C) χ^μ(C) = n!·[λ=μ]`.
    pub fn check_row_orthogonality(&self) -> bool {
        let order = BigInt::from(factorial(self.n));
        let sizes: Vec<BigInt> = self
            .classes
            .iter()
            .map(|c| BigInt::from(c.class_size.clone()))
            .collect();
        for a in 0..self.partitions.len() {
            for b in a..self.partitions.len() {
                let s: BigInt = (0..self.classes.len())
                    .map(|c| &sizes[c] * self.values[a][c] * self.values[b][c])
                    .sum();
                let expect = if a == b {
                    order.clone()
                } else {
                    BigInt::zero()
                };
                if s != expect {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ_λ χ^λ(C) χ^λ(C') = (n!/|C|)·[C=C']`.
    pub fn check_column_orthogonality(&self) -> bool {
        let order = factorial(self.n);
        for c in 0..self.classes.len() {
            for d in c..self.classes.len() {
                let s: i128 = (0..self.partitions.len())
                    .map(|r| self.values[r][c] as i128 * self.values[r][d] as i128)
                    .sum();
                let expect = if c == d {
                    BigInt::from(&order / &self.classes[c].class_size)
                } else {
                    BigInt::zero()
                };
                if BigInt::from(s) != expect {
                    return false;
                }
            }
        }
        true
    }
}

fn table_cache() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Cached character table of S_n, verified by both orthogonality relations.
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    character_table_with_limit(n, EXACT_TABLE_LIMIT)
}

pub fn character_table_with_limit(n: usize, limit: usize) -> Result<Arc<CharacterTable>> {
    if n == 0 {
        return Err(Error::invalid("character table requires n ≥ 1"));
    }
    if n > limit {
        return Err(Error::capacity(
            "symmetric-characters",
            "character table n",
            n,
            limit,
        ));
    }
    if let Some(t) = table_cache().lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let partitions = enumerate_partitions(n);
    let classes = enumerate_classes(n);
    let mut memo = Memo::new();
    let values: Vec<Vec<i64>> = partitions
        .iter()
        .map(|lam| {
            classes
                .iter()
                .map(|c| mn_rec(lam.parts(), c.cycle_lengths.parts(), &mut memo) as i64)
                .collect()
        })
        .collect();
    let table = CharacterTable {
        n,
        partitions,
        classes,
        values,
    };
    if !table.check_row_orthogonality() || !table.check_column_orthogonality() {
        return Err(Error::Internal(format!(
            "character table of S_{n} failed orthogonality"
        )));
    }
    let table = Arc::new(table);
    table_cache().lock().unwrap().insert(n, table.clone());
    Ok(table)
}

/// Number of derangements of `m` symbols, by inclusion–exclusion.
pub fn derangements(m: usize) -> BigUint {
    let mut acc = BigInt::zero();
    let mfact = BigInt::from(factorial(m));
    for k in 0..=m {
        let term = &mfact / BigInt::from(factorial(k));
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint().expect("derangement count is non-negative")
}

/// Count of permutations of `n` symbols with exactly `i` fixed points, keyed by `i`.
/// Zero counts are omitted.
pub fn fixed_point_profile(n: usize) -> BTreeMap<usize, BigUint> {
    (0..=n)
        .map(|i| (i, binomial(n, i) * derangements(n - i)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}
