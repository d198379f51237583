use std::collections::HashMap;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::{factorial, q_ratio, q_render, q_to_f64, Q};
use crate::partition::{enumerate_partitions, Partition};

/// Arithmetic payload of kernels and distributions: exact rationals or `f64`.
pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + 'static
{
    const EXACT: bool;
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self;
    fn from_q(x: &Q) -> Self;
    fn to_f64(&self) -> f64;
    fn abs_val(&self) -> Self;
    /// `p/q` for rationals, shortest round-trip decimal for floats.
    fn render(&self) -> String;
}

impl Scalar for Q {
    const EXACT: bool = true;

    fn from_ratio(num: &BigUint, den: &BigUint) -> Self {
        q_ratio(num, den)
    }

    fn from_q(x: &Q) -> Self {
        x.clone()
    }

    fn to_f64(&self) -> f64 {
        q_to_f64(self)
    }

    fn abs_val(&self) -> Self {
        self.abs()
    }

    fn render(&self) -> String {
        q_render(self)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_ratio(num: &BigUint, den: &BigUint) -> Self {
        let q = q_ratio(num, den);
        q_to_f64(&q)
    }

    fn from_q(x: &Q) -> Self {
        q_to_f64(x)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs_val(&self) -> Self {
        self.abs()
    }

    fn render(&self) -> String {
        format!("{self}")
    }
}

/// Partitions of `n` in enumeration order with their S_n dimensions.
#[derive(Debug)]
pub struct StateSpace {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    dims: Vec<BigUint>,
    order: BigUint,
}

impl StateSpace {
    fn build(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let dims = partitions.iter().map(Partition::dimension).collect();
        StateSpace {
            n,
            partitions,
            index,
            dims,
            order: factorial(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn partition(&self, i: usize) -> &Partition {
        &self.partitions[i]
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `p`, or a size-mismatch error.
    pub fn require(&self, p: &Partition) -> Result<usize> {
        self.index_of(p).ok_or(Error::SizeMismatch {
            expected: self.n,
            actual: p.size(),
        })
    }

    pub fn dim(&self, i: usize) -> &BigUint {
        &self.dims[i]
    }

    pub fn dims(&self) -> &[BigUint] {
        &self.dims
    }

    /// `|S_n| = n!`.
    pub fn group_order(&self) -> &BigUint {
        &self.order
    }

    pub fn log_dim(&self, i: usize) -> f64 {
        self.dims[i]
            .to_f64()
            .map(f64::ln)
            .unwrap_or_else(|| self.partitions[i].log_dimension())
    }
}

fn space_cache() -> &'static Mutex<HashMap<usize, Arc<StateSpace>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<StateSpace>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared state space for partitions of `n`.
pub fn state_space(n: usize) -> Arc<StateSpace> {
    if let Some(s) = space_cache().lock().unwrap().get(&n) {
        return s.clone();
    }
    let s = Arc::new(StateSpace::build(n));
    space_cache().lock().unwrap().entry(n).or_insert(s).clone()
}

/// Probability vector over the partitions of `n`.
#[derive(Clone, Debug)]
pub struct Distribution<S> {
    space: Arc<StateSpace>,
    masses: Vec<S>,
}

impl<S: Scalar> Distribution<S> {
    pub fn from_masses(space: Arc<StateSpace>, masses: Vec<S>) -> Self {
        assert_eq!(space.len(), masses.len());
        Distribution { space, masses }
    }

    pub fn point_mass(space: Arc<StateSpace>, at: usize) -> Self {
        let mut masses = vec![S::zero(); space.len()];
        masses[at] = S::one();
        Distribution { space, masses }
    }

    /// Plancherel measure `d_λ² / n!`.
    pub fn plancherel(space: Arc<StateSpace>) -> Self {
        let masses = space
            .dims()
            .iter()
            .map(|d| S::from_ratio(&(d * d), space.group_order()))
            .collect();
        Distribution { space, masses }
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    pub fn masses(&self) -> &[S] {
        &self.masses
    }

    pub fn mass(&self, p: &Partition) -> Option<&S> {
        self.space.index_of(p).map(|i| &self.masses[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &S)> {
        self.space.partitions().iter().zip(self.masses.iter())
    }

    pub fn total(&self) -> S {
        self.masses.iter().cloned().fold(S::zero(), |a, b| a + b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.masses.iter().all(|m| *m >= S::zero())
    }

    /// `½ Σ |p − q|`.
    pub fn tv(&self, other: &Distribution<S>) -> S {
        let two = S::one() + S::one();
        self.masses
            .iter()
            .zip(&other.masses)
            .map(|(a, b)| (a.clone() - b.clone()).abs_val())
            .fold(S::zero(), |a, b| a + b)
            / two
    }

    /// The event `{λ : p(λ) > q(λ)}` and its discrepancy `p(A) − q(A)`,
    /// which attains the maximum over all events.
    pub fn tv_witness(&self, other: &Distribution<S>) -> (Vec<Partition>, S) {
        let mut event = Vec::new();
        let mut gap = S::zero();
        for (i, (a, b)) in self.masses.iter().zip(&other.masses).enumerate() {
            if a > b {
                event.push(self.space.partition(i).clone());
                gap = gap + (a.clone() - b.clone());
            }
        }
        (event, gap)
    }

    pub fn to_float(&self) -> Distribution<f64> {
        Distribution {
            space: self.space.clone(),
            masses: self.masses.iter().map(Scalar::to_f64).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q_frac;

    #[test]
    fn plancherel_small() {
        let pi = Distribution::<Q>::plancherel(state_space(3));
        assert_eq!(pi.masses(), &[q_frac(1, 6), q_frac(2, 3), q_frac(1, 6)]);
        let pi1 = Distribution::<Q>::plancherel(state_space(1));
        assert_eq!(pi1.masses(), &[Q::one()]);
        assert_eq!(
            Distribution::<Q>::plancherel(state_space(8)).total(),
            Q::one()
        );
        let pf = Distribution::<f64>::plancherel(state_space(30));
        assert!((pf.total() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tv_forms_agree() {
        let space = state_space(4);
        let pi = Distribution::<Q>::plancherel(space.clone());
        let delta = Distribution::<Q>::point_mass(space, 1);
        let (event, gap) = delta.tv_witness(&pi);
        assert_eq!(event, vec!["3+1".parse().unwrap()]);
        assert_eq!(gap, delta.tv(&pi));
        assert_eq!(pi.tv(&pi), Q::zero());
    }

    #[test]
    fn log_dims_match_exact() {
        let space = state_space(26);
        for (i, p) in space.partitions().iter().enumerate().step_by(97) {
            assert!((space.log_dim(i) - p.log_dimension()).abs() < 1e-9);
        }
    }
}
