use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{q_from_uint, q_pow, q_to_f64, Q};
use crate::partition::Partition;
use crate::walk::bounds::sn_upper_bound;
use crate::walk::kernel::{kernel_downup, SparseKernel};
use crate::walk::space::{state_space, Distribution, Scalar};

/// Largest `n` for exact rational kernel iteration.
pub const EXACT_WALK_LIMIT: usize = 18;
/// Largest `n` for floating-point kernel iteration.
pub const FLOAT_WALK_LIMIT: usize = 40;
/// Per-entry relative accuracy assumed for float kernels.
pub const FLOAT_ENTRY_ERROR: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn limit(self) -> usize {
        match self {
            Mode::Exact => EXACT_WALK_LIMIT,
            Mode::Float => FLOAT_WALK_LIMIT,
        }
    }

    pub(crate) fn check(self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        if n > self.limit() {
            let what = match self {
                Mode::Exact => "exact walk n",
                Mode::Float => "float walk n",
            };
            return Err(Error::capacity("sn-walk", what, n, self.limit()));
        }
        Ok(())
    }
}

/// An r-step distribution in either payload.
#[derive(Clone, Debug)]
pub enum WalkDistribution {
    Exact(Distribution<Q>),
    Float(Distribution<f64>),
}

impl WalkDistribution {
    pub fn n(&self) -> usize {
        match self {
            WalkDistribution::Exact(d) => d.n(),
            WalkDistribution::Float(d) => d.n(),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            WalkDistribution::Exact(_) => Mode::Exact,
            WalkDistribution::Float(_) => Mode::Float,
        }
    }

    /// `(partition, rendered mass)` rows in enumeration order.
    pub fn rows(&self) -> Vec<(String, String)> {
        match self {
            WalkDistribution::Exact(d) => {
                d.iter().map(|(p, m)| (p.to_string(), m.render())).collect()
            }
            WalkDistribution::Float(d) => {
                d.iter().map(|(p, m)| (p.to_string(), m.render())).collect()
            }
        }
    }

    pub fn masses_f64(&self) -> Vec<f64> {
        match self {
            WalkDistribution::Exact(d) => d.masses().iter().map(q_to_f64).collect(),
            WalkDistribution::Float(d) => d.masses().to_vec(),
        }
    }

    pub fn exact(&self) -> Option<&Distribution<Q>> {
        match self {
            WalkDistribution::Exact(d) => Some(d),
            WalkDistribution::Float(_) => None,
        }
    }

    pub fn tv_to_plancherel_f64(&self) -> f64 {
        match self {
            WalkDistribution::Exact(d) => q_to_f64(&tv_to_plancherel(d)),
            WalkDistribution::Float(d) => tv_to_plancherel(d),
        }
    }
}

/// Plancherel measure of S_n, exact.
pub fn plancherel_sn(n: usize) -> Distribution<Q> {
    Distribution::plancherel(state_space(n))
}

/// `½ Σ_λ |dist(λ) − π(λ)|`.
pub fn tv_to_plancherel<S: Scalar>(dist: &Distribution<S>) -> S {
    let pi = Distribution::<S>::plancherel(dist.space().clone());
    dist.tv(&pi)
}

/// Iterates `kernel` from a point mass, returning the distribution after `r` steps.
pub fn evolve<S: Scalar>(kernel: &SparseKernel<S>, start: usize, r: usize) -> Distribution<S> {
    let mut dist = Distribution::point_mass(kernel.space().clone(), start);
    for _ in 0..r {
        dist = kernel.step(&dist);
    }
    dist
}

/// r-step distribution of the walk started at `start`.
pub fn walk_distribution(
    n: usize,
    r: usize,
    start: &Partition,
    mode: Mode,
) -> Result<WalkDistribution> {
    mode.check(n)?;
    let x = state_space(n).require(start)?;
    Ok(match mode {
        Mode::Exact => WalkDistribution::Exact(evolve(&kernel_downup::<Q>(n)?, x, r)),
        Mode::Float => WalkDistribution::Float(evolve(&kernel_downup::<f64>(n)?, x, r)),
    })
}

/// `m_ρ(η^r) = n^r K^r((n), ρ) / d_ρ` read off the walk; errors if any value is not
/// a non-negative integer.
pub fn eta_power_multiplicities(n: usize, r: usize) -> Result<Vec<BigInt>> {
    Mode::Exact.check(n)?;
    let kernel = kernel_downup::<Q>(n)?;
    let dist = evolve(&kernel, 0, r);
    let scale = q_pow(&Q::from_integer(BigInt::from(n)), r);
    let space = dist.space().clone();
    dist.masses()
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let v = m * &scale / q_from_uint(space.dim(i));
            if crate::numeric::is_nonneg_integer(&v) {
                Ok(v.to_integer())
            } else {
                Err(Error::Internal(format!(
                    "m_ρ(η^{r}) not integral at {}",
                    space.partition(i)
                )))
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TvPoint {
    pub r: usize,
    pub tv: f64,
    /// Exact TV rendered as `p/q` in exact mode.
    pub tv_exact: Option<String>,
    pub l2_bound: f64,
    /// Accumulated float error bound `r·p(n)·1e−14`; zero in exact mode.
    pub float_error: f64,
}

/// TV to Plancherel for `r = 1..=rmax` from the trivial representation.
pub fn tv_curve(n: usize, rmax: usize, mode: Mode) -> Result<Vec<TvPoint>> {
    mode.check(n)?;
    let space = state_space(n);
    let mut out = Vec::with_capacity(rmax);
    match mode {
        Mode::Exact => {
            let k = kernel_downup::<Q>(n)?;
            let pi = Distribution::<Q>::plancherel(space.clone());
            let mut d = Distribution::point_mass(space, 0);
            for r in 1..=rmax {
                d = k.step(&d);
                let tv = d.tv(&pi);
                out.push(TvPoint {
                    r,
                    tv: q_to_f64(&tv),
                    tv_exact: Some(tv.render()),
                    l2_bound: sn_upper_bound(n, r),
                    float_error: 0.0,
                });
            }
        }
        Mode::Float => {
            let k = kernel_downup::<f64>(n)?;
            let pi = Distribution::<f64>::plancherel(space.clone());
            let states = space.len() as f64;
            let mut d = Distribution::point_mass(space, 0);
            for r in 1..=rmax {
                d = k.step(&d);
                out.push(TvPoint {
                    r,
                    tv: d.tv(&pi),
                    tv_exact: None,
                    l2_bound: sn_upper_bound(n, r),
                    float_error: r as f64 * states * FLOAT_ENTRY_ERROR,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q_frac;
    use crate::walk::spectrum::{
        eta_power_multiplicities_from_characters, spectral_walk_distribution,
    };
    use num_traits::{One, Zero};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_walks() {
        let d = walk_distribution(3, 0, &p("2+1"), Mode::Exact).unwrap();
        assert_eq!(
            d.exact().unwrap().masses(),
            &[Q::zero(), Q::one(), Q::zero()]
        );
        let d = walk_distribution(3, 1, &p("3"), Mode::Exact).unwrap();
        let d = d.exact().unwrap();
        assert_eq!(d.masses(), &[q_frac(1, 3), q_frac(2, 3), Q::zero()]);
        assert_eq!(tv_to_plancherel(d), q_frac(1, 6));
        let two = walk_distribution(3, 2, &p("3"), Mode::Exact).unwrap();
        let spectral = spectral_walk_distribution(3, 2, &p("3")).unwrap();
        assert_eq!(two.exact().unwrap().masses(), spectral.masses());
        assert_eq!(
            spectral.masses(),
            &[q_frac(2, 9), q_frac(2, 3), q_frac(1, 9)]
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            walk_distribution(3, 1, &p("2+2"), Mode::Exact),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(matches!(
            walk_distribution(19, 1, &p("19"), Mode::Exact),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            walk_distribution(41, 1, &p("41"), Mode::Float),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn eta_multiplicities_two_routes() {
        for n in 2..=6 {
            for r in 0..=5 {
                let a = eta_power_multiplicities(n, r).unwrap();
                let b = eta_power_multiplicities_from_characters(n, r).unwrap();
                assert_eq!(a.into_iter().map(Q::from_integer).collect::<Vec<_>>(), b);
            }
        }
    }

    #[test]
    fn float_agrees_with_exact() {
        let e = walk_distribution(10, 7, &p("10"), Mode::Exact).unwrap();
        let f = walk_distribution(10, 7, &p("10"), Mode::Float).unwrap();
        for (a, b) in e.masses_f64().iter().zip(f.masses_f64()) {
            assert!((a - b).abs() < 1e-13);
        }
        assert!((e.tv_to_plancherel_f64() - f.tv_to_plancherel_f64()).abs() < 1e-13);
    }

    #[test]
    fn curve_is_monotone() {
        let c = tv_curve(8, 30, Mode::Exact).unwrap();
        assert_eq!(c.len(), 30);
        assert!(c.windows(2).all(|w| w[1].tv <= w[0].tv));
        assert!(c.iter().all(|pt| pt.tv <= pt.l2_bound));
    }
}
