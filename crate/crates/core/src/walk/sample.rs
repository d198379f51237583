use std::collections::HashMap;

use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;

use crate::partition::{dimension_sn, Partition};
use crate::rng::{derive_seed, rng_from_seed, uniform_below, SeededRng};

/// Memoized `d_λ` for partitions met along a trajectory.
#[derive(Default)]
pub struct DimCache {
    dims: HashMap<Partition, BigUint>,
}

impl DimCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, p: &Partition) -> BigUint {
        if p.is_empty() {
            return BigUint::from(1u32);
        }
        self.dims
            .entry(p.clone())
            .or_insert_with(|| dimension_sn(p).expect("valid partition"))
            .clone()
    }
}

/// Picks `options[i]` with probability `weights[i]/total` using an exact uniform
/// integer below `total`; ties go to the earliest option.
fn pick<T: Clone>(rng: &mut SeededRng, options: &[T], weights: &[BigUint], total: &BigUint) -> T {
    let u = uniform_below(rng, total);
    let mut acc = BigUint::from(0u32);
    for (o, w) in options.iter().zip(weights) {
        acc += w;
        if u < acc {
            return o.clone();
        }
    }
    unreachable!("weights must sum to total")
}

fn up_step(rng: &mut SeededRng, dims: &mut DimCache, mu: &Partition) -> Partition {
    let k = mu.size() + 1;
    let options = mu.addable();
    let weights: Vec<BigUint> = options.iter().map(|r| dims.get(r)).collect();
    let total = dims.get(mu) * BigUint::from(k);
    pick(rng, &options, &weights, &total)
}

/// One down-up move: remove a corner with probability `d_μ/d_λ`, then add a box
/// with probability `d_ρ/(n·d_μ)`.
pub fn down_up_step(rng: &mut SeededRng, dims: &mut DimCache, lambda: &Partition) -> Partition {
    let options = lambda.removable();
    let weights: Vec<BigUint> = options.iter().map(|m| dims.get(m)).collect();
    let mu = pick(rng, &options, &weights, &dims.get(lambda));
    up_step(rng, dims, &mu)
}

/// Endpoint of `r` down-up steps started at `(n)`.
pub fn sample_walk(n: usize, r: usize, seed: u64) -> Partition {
    let mut rng = rng_from_seed(seed);
    let mut dims = DimCache::new();
    let mut lambda = Partition::row(n);
    for _ in 0..r {
        lambda = down_up_step(&mut rng, &mut dims, &lambda);
    }
    lambda
}

/// Draws λ with probability `d_λ²/n!` by growing from the empty partition.
pub fn sample_plancherel_sn(n: usize, seed: u64) -> Partition {
    let mut rng = rng_from_seed(seed);
    let mut dims = DimCache::new();
    let mut lambda = Partition::empty();
    for _ in 0..n {
        lambda = up_step(&mut rng, &mut dims, &lambda);
    }
    lambda
}

/// `count` independent walk samples; item `i` uses `derive_seed(seed, i)`.
pub fn sample_walk_batch(n: usize, r: usize, count: usize, seed: u64) -> Vec<Partition> {
    (0..count)
        .into_par_iter()
        .map(|i| sample_walk(n, r, derive_seed(seed, i as u64)))
        .collect()
}

pub fn sample_plancherel_batch(n: usize, count: usize, seed: u64) -> Vec<Partition> {
    (0..count)
        .into_par_iter()
        .map(|i| sample_plancherel_sn(n, derive_seed(seed, i as u64)))
        .collect()
}

/// `r` top-to-random moves on the deck `1..=n`: the top card is reinserted at
/// one of the `n` positions uniformly.
pub fn top_to_random(n: usize, r: usize, rng: &mut SeededRng) -> Vec<usize> {
    let mut deck: Vec<usize> = (1..=n).collect();
    for _ in 0..r {
        if n > 1 {
            let top = deck.remove(0);
            let pos = rng.random_range(0..n);
            deck.insert(pos, top);
        }
    }
    deck
}

/// Common shape of the RSK tableaux of a sequence of distinct values.
pub fn rsk_shape(word: &[usize]) -> Partition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in word {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&v| v < carry);
            if pos == row.len() {
                row.push(carry);
                placed = true;
                break;
            }
            std::mem::swap(&mut row[pos], &mut carry);
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    Partition::from_unsorted(rows.iter().map(Vec::len).collect())
}

/// RSK shape after `r` top-to-random shuffles of the identity deck.
pub fn rsk_oracle(n: usize, r: usize, seed: u64) -> Partition {
    let mut rng = rng_from_seed(seed);
    rsk_shape(&top_to_random(n, r, &mut rng))
}

pub fn rsk_batch(n: usize, r: usize, count: usize, seed: u64) -> Vec<Partition> {
    (0..count)
        .into_par_iter()
        .map(|i| rsk_oracle(n, r, derive_seed(seed, i as u64)))
        .collect()
}

/// Counts of each partition of `n` in enumeration order.
pub fn histogram(n: usize, samples: &[Partition]) -> Vec<u64> {
    let space = crate::walk::space::state_space(n);
    let mut counts = vec![0u64; space.len()];
    for s in samples {
        if let Some(i) = space.index_of(s) {
            counts[i] += 1;
        }
    }
    counts
}
