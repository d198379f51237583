//! Exact Plancherel sampling on Irr(GL(n, q)) by rejection.
//!
//! Every cuspidal label `c` of degree `d` independently receives a partition
//! drawn from `S_{u^d, q^d}`. Conditioned on total degree `n`, the family is
//! Plancherel distributed. Labels of one degree are handled in bulk: the number
//! of nonempty ones is binomial over `N_d(q)` trials with success probability
//! `1 − Z_d`, the occupied labels are a uniform subset, and each partition is
//! drawn from `S` conditioned to be nonempty.
//!
//! Once the budget left is smaller than the next degree, all remaining labels
//! must be empty. That event has probability `E(u)/Π_{d'<d} Z_{d'}^{N_{d'}}`
//! with `E(u) = Π_{m≥0}(1 − u/q^m) = Π_c Z_c`, and is drawn as one Bernoulli.
//! All decisions compare a lazily refined uniform against certified interval
//! thresholds, so no decision depends on rounding.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::seq::index::sample as sample_indices;
use rayon::prelude::*;

use crate::asymptotics::certified::{
    euler_product, weighted_product, CachedThresholds, Iv, LazyUniform, Thresholds,
};
use crate::asymptotics::suq::suq_weight;
use crate::error::{Error, Result};
use crate::gl::cuspidal::{cuspidal_count_usize, CuspidalLabel};
use crate::gl::irreps::GLIrrep;
use crate::numeric::{binomial, q_frac, q_from_uint, q_int, q_pow, Q};
use crate::partition::{enumerate_partitions, Partition};
use crate::rng::{derive_seed, rng_from_seed, SeededRng};
use crate::series::q_pochhammer;

pub const GL_SAMPLE_MAX_N: usize = 20;
pub const GL_SAMPLE_MAX_Q: u64 = 3;
pub const DEFAULT_ATTEMPT_CAP: u64 = 10_000_000;
/// Bits kept for the cached thresholds.
const BASE_PRECISION: u32 = 192;

/// `u = 1 − 1/max(n, 2)` clamped to `[1/2, 63/64]`.
pub fn default_u(n: usize) -> Q {
    let u = Q::one() - q_frac(1, n.max(2) as i64);
    u.clamp(q_frac(1, 2), q_frac(63, 64))
}

#[derive(Clone)]
struct DegreeParams {
    d: usize,
    count: u64,
    /// `u^d` and `q^{−d}`.
    ud: Q,
    xd: Q,
}

impl DegreeParams {
    fn z(&self, prec: u32) -> Iv {
        weighted_product(&self.ud, &self.xd, prec)
    }
}

/// Cumulative `P(k)` for `k = 0..=kmax` with `k ~ Binomial(N_d, 1 − Z_d)`.
struct BinomialCdf {
    deg: DegreeParams,
    kmax: usize,
}

impl Thresholds for BinomialCdf {
    fn at_precision(&self, prec: u32) -> Vec<Iv> {
        let z = self.deg.z(prec);
        binomial_cdf(&self.deg, self.kmax, &z)
    }
}

fn binomial_cdf(deg: &DegreeParams, kmax: usize, z: &Iv) -> Vec<Iv> {
    let prec = z.prec;
    let p = Iv::one(prec).sub(z).clamp_nonneg();
    let n = deg.count;
    let kmax = kmax.min(n as usize);
    let mut zpow = z.pow(n - kmax as u64);
    let mut terms = vec![Iv::zero(prec); kmax + 1];
    for k in (0..=kmax).rev() {
        let c = Iv::from_q(&q_from_uint(&binomial_u64(n, k)), prec);
        terms[k] = c.mul(&p.pow(k as u64)).mul(&zpow);
        zpow = zpow.mul(z);
    }
    cumulative(terms)
}

fn binomial_u64(n: u64, k: usize) -> num_bigint::BigUint {
    if let Ok(nn) = usize::try_from(n) {
        return binomial(nn, k);
    }
    let mut acc = num_bigint::BigUint::one();
    for i in 0..k as u64 {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn cumulative(terms: Vec<Iv>) -> Vec<Iv> {
    let mut out = Vec::with_capacity(terms.len());
    let mut acc: Option<Iv> = None;
    for t in terms {
        let next = match acc {
            None => t,
            Some(a) => a.add(&t),
        };
        out.push(next.clone());
        acc = Some(next);
    }
    out
}

/// Cumulative masses of `S_{u^d, q^d}` conditioned on a nonempty partition,
/// over partitions of size `1..=smax`.
struct ConditionedCdf {
    deg: DegreeParams,
    weights: Vec<Q>,
}

impl Thresholds for ConditionedCdf {
    fn at_precision(&self, prec: u32) -> Vec<Iv> {
        let z = self.deg.z(prec);
        conditioned_cdf(&self.weights, &z)
    }
}

fn conditioned_cdf(weights: &[Q], z: &Iv) -> Vec<Iv> {
    let prec = z.prec;
    let scale = z.div(&Iv::one(prec).sub(z).clamp_nonneg());
    cumulative(weights.iter().map(|w| scale.mul_q(w)).collect())
}

/// `E(u)/Π_{d'<d} Z_{d'}^{N_{d'}}`, the chance all labels of degree `≥ d` are empty.
struct EmptyTail {
    u: Q,
    q: u64,
    lower: Vec<DegreeParams>,
}

impl Thresholds for EmptyTail {
    fn at_precision(&self, prec: u32) -> Vec<Iv> {
        let zs: Vec<Iv> = self.lower.iter().map(|d| d.z(prec).pow(d.count)).collect();
        vec![empty_tail(&self.u, self.q, &zs, prec)]
    }
}

fn empty_tail(u: &Q, q: u64, z_pows: &[Iv], prec: u32) -> Iv {
    let e = euler_product(u, &q_frac(1, q as i64), prec);
    let den = z_pows.iter().fold(Iv::one(prec), |a, z| a.mul(z));
    e.div(&den)
}

struct DegreeTables {
    params: DegreeParams,
    binom: CachedThresholds<BinomialCdf>,
    parts: Vec<Partition>,
    conditioned: CachedThresholds<ConditionedCdf>,
    /// Bernoulli for "every label of degree ≥ d is empty".
    empty_from_here: CachedThresholds<EmptyTail>,
}

/// Rejection sampler for Plancherel measure of GL(n, q).
pub struct GlSampler {
    n: usize,
    q: u64,
    u: Q,
    degrees: Vec<DegreeTables>,
    empty_after_all: CachedThresholds<EmptyTail>,
    attempt_cap: u64,
}

/// Result of one rejection attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Attempt {
    Accepted(GLIrrep),
    Rejected,
}

impl GlSampler {
    pub fn new(n: usize, q: u64, u: Option<Q>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        if n > GL_SAMPLE_MAX_N {
            return Err(Error::capacity("gl-sample", "n", n, GL_SAMPLE_MAX_N));
        }
        if !(2..=GL_SAMPLE_MAX_Q).contains(&q) {
            return Err(Error::capacity(
                "gl-sample",
                "q",
                q as usize,
                GL_SAMPLE_MAX_Q as usize,
            ));
        }
        let u = u.unwrap_or_else(|| default_u(n));
        if u <= Q::zero() || u >= Q::one() {
            return Err(Error::invalid("u must satisfy 0 < u < 1"));
        }
        let prec = BASE_PRECISION;
        let x = q_frac(1, q as i64);
        let params: Vec<DegreeParams> = (1..=n)
            .map(|d| DegreeParams {
                d,
                count: cuspidal_count_usize(d, q).expect("cuspidal count fits") as u64,
                ud: q_pow(&u, d),
                xd: q_pow(&x, d),
            })
            .collect();
        let zs: Vec<Iv> = params.iter().map(|p| p.z(prec)).collect();
        let z_pows: Vec<Iv> = params
            .iter()
            .zip(&zs)
            .map(|(p, z)| z.pow(p.count))
            .collect();
        let tail_source = |d0: usize| EmptyTail {
            u: u.clone(),
            q,
            lower: params[..d0].to_vec(),
        };
        let mut degrees = Vec::with_capacity(n);
        for (i, p) in params.iter().enumerate() {
            let d = p.d;
            let smax = n / d;
            let parts: Vec<Partition> = (1..=smax).flat_map(enumerate_partitions).collect();
            let qd = q_pow(&q_int(q as i64), d);
            let weights: Vec<Q> = parts.iter().map(|l| suq_weight(&p.ud, &qd, l)).collect();
            let binom_src = BinomialCdf {
                deg: p.clone(),
                kmax: smax,
            };
            let binom_cached = binomial_cdf(p, smax, &zs[i]);
            let cond_cached = conditioned_cdf(&weights, &zs[i]);
            let tail_cached = vec![empty_tail(&u, q, &z_pows[..i], prec)];
            degrees.push(DegreeTables {
                params: p.clone(),
                binom: CachedThresholds::with_cached(binom_src, binom_cached),
                parts,
                conditioned: CachedThresholds::with_cached(
                    ConditionedCdf {
                        deg: p.clone(),
                        weights,
                    },
                    cond_cached,
                ),
                empty_from_here: CachedThresholds::with_cached(tail_source(i), tail_cached),
            });
        }
        let empty_after_all =
            CachedThresholds::with_cached(tail_source(n), vec![empty_tail(&u, q, &z_pows, prec)]);
        Ok(GlSampler {
            n,
            q,
            u,
            degrees,
            empty_after_all,
            attempt_cap: DEFAULT_ATTEMPT_CAP,
        })
    }

    pub fn with_attempt_cap(mut self, cap: u64) -> Self {
        self.attempt_cap = cap.max(1);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn u(&self) -> &Q {
        &self.u
    }

    /// One draw of the independent-label model restricted to total degree `n`.
    pub fn attempt(&self, rng: &mut SeededRng) -> Attempt {
        let mut remaining = self.n;
        let mut assignment = BTreeMap::new();
        for table in &self.degrees {
            let d = table.params.d;
            if d > remaining {
                if remaining != 0 {
                    return Attempt::Rejected;
                }
                let mut u = LazyUniform::new(rng);
                return if table.empty_from_here.locate(&mut u, rng) == 0 {
                    Attempt::Accepted(self.family(assignment))
                } else {
                    Attempt::Rejected
                };
            }
            let mut u = LazyUniform::new(rng);
            let k = table.binom.locate(&mut u, rng);
            if k * d > remaining {
                return Attempt::Rejected;
            }
            if k == 0 {
                continue;
            }
            let mut idx = sample_indices(rng, table.params.count as usize, k).into_vec();
            idx.sort_unstable();
            for index in idx {
                let mut u = LazyUniform::new(rng);
                let j = table.conditioned.locate(&mut u, rng);
                if j >= table.parts.len() {
                    return Attempt::Rejected;
                }
                let lam = &table.parts[j];
                if lam.size() * d > remaining {
                    return Attempt::Rejected;
                }
                remaining -= lam.size() * d;
                assignment.insert(CuspidalLabel { degree: d, index }, lam.clone());
            }
        }
        if remaining != 0 {
            return Attempt::Rejected;
        }
        let mut u = LazyUniform::new(rng);
        if self.empty_after_all.locate(&mut u, rng) == 0 {
            Attempt::Accepted(self.family(assignment))
        } else {
            Attempt::Rejected
        }
    }

    fn family(&self, assignment: BTreeMap<CuspidalLabel, Partition>) -> GLIrrep {
        GLIrrep {
            n: self.n,
            q: self.q,
            assignment,
        }
    }

    /// First accepted family from the stream seeded by `seed`, with the number of attempts.
    pub fn sample(&self, seed: u64) -> Result<(GLIrrep, u64)> {
        let mut rng = rng_from_seed(seed);
        for attempt in 1..=self.attempt_cap {
            if let Attempt::Accepted(f) = self.attempt(&mut rng) {
                return Ok((f, attempt));
            }
        }
        Err(Error::AcceptanceFailure {
            attempts: self.attempt_cap,
        })
    }

    /// `count` samples; sample `i` uses `derive_seed(seed, i)`.
    pub fn sample_batch(&self, count: usize, seed: u64) -> Result<Vec<GLIrrep>> {
        (0..count)
            .into_par_iter()
            .map(|i| self.sample(derive_seed(seed, i as u64)).map(|(f, _)| f))
            .collect()
    }

    /// Accepted attempts out of `attempts`, split over derived seeds.
    pub fn count_acceptances(&self, attempts: u64, seed: u64) -> u64 {
        let chunks = 64u64;
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut rng = rng_from_seed(derive_seed(seed, c));
                let share = attempts / chunks + u64::from(c < attempts % chunks);
                (0..share)
                    .filter(|_| matches!(self.attempt(&mut rng), Attempt::Accepted(_)))
                    .count() as u64
            })
            .sum()
    }
}

/// `P(N = n) = Π_{m≥0}(1 − u/q^m)·u^n/(1/q)_n`, the acceptance probability.
pub fn acceptance_probability(n: usize, q: u64, u: &Q) -> Iv {
    let prec = BASE_PRECISION;
    let e = euler_product(u, &q_frac(1, q as i64), prec);
    e.mul_q(&(q_pow(u, n) / q_pochhammer(&q_int(q as i64), n)))
}

/// `count` Plancherel samples of Irr(GL(n, q)).
pub fn gl_plancherel_sample(
    n: usize,
    q: u64,
    u: Option<Q>,
    count: usize,
    seed: u64,
) -> Result<Vec<GLIrrep>> {
    GlSampler::new(n, q, u)?.sample_batch(count, seed)
}
