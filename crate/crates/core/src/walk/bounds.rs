use num_bigint::BigInt;
use num_traits::Zero;

use crate::characters::fixed_point_profile;
use crate::numeric::{binomial, q_frac, q_from_uint, q_pow, q_to_f64, Q};

/// `Σ_{i=0}^{n−2} count(i)·(i/n)^{2r}`, the exact L² distance `Σ_y |K^r − π|²/π`
/// from the trivial representation, which bounds `4·TV²`.
pub fn sn_l2_sum(n: usize, r: usize) -> Q {
    let profile = fixed_point_profile(n);
    profile
        .iter()
        .filter(|(i, _)| **i + 2 <= n)
        .map(|(i, count)| {
            q_from_uint(count) * q_pow(&Q::new(BigInt::from(*i), BigInt::from(n)), 2 * r)
        })
        .fold(Q::zero(), |a, b| a + b)
}

/// `½·sqrt(Σ_{i=0}^{n−2} count(i)·(i/n)^{2r})`, an upper bound on TV after `r` steps.
pub fn sn_upper_bound(n: usize, r: usize) -> f64 {
    0.5 * q_to_f64(&sn_l2_sum(n, r)).sqrt()
}

/// `r = ⌈½·n·ln n + c·n⌉`.
pub fn sn_cutoff_steps(n: usize, c: f64) -> usize {
    let nf = n as f64;
    (0.5 * nf * nf.ln() + c * nf).ceil().max(0.0) as usize
}

/// `e^{−2c}/2`, the TV ceiling at `r = ½·n·ln n + c·n`, valid for `c ≥ 1`.
pub fn sn_cutoff_ceiling(c: f64) -> f64 {
    (-2.0 * c).exp() / 2.0
}

/// Exact `E_{K^r}[f_C]²` and `E_{K^r}[f_C²]` for `C` the transpositions.
pub fn transposition_moments_exact(n: usize, r: usize) -> (Q, Q) {
    let nn = n as i64;
    let c2 = q_from_uint(&binomial(n, 2));
    let mean_sq = &c2 * q_pow(&q_frac(nn - 2, nn), 2 * r);
    let second = Q::from_integer(1.into())
        + q_from_uint(&binomial(n.saturating_sub(2), 2)) * q_pow(&q_frac(nn - 4, nn), r)
        + Q::from_integer(BigInt::from(2 * nn - 4)) * q_pow(&q_frac(nn - 3, nn), r);
    (mean_sq, second)
}

/// Chebyshev lower bound on TV using `f_C` for the transposition class:
/// `1 − 1/α² − Var(f_C)/(E[f_C] − α)²` when `E[f_C] > α`, clamped at zero.
pub fn sn_lower_bound_estimate(n: usize, r: usize, alpha: f64) -> f64 {
    if n < 2 || alpha <= 0.0 {
        return 0.0;
    }
    let (mean_sq, second) = transposition_moments_exact(n, r);
    let var = q_to_f64(&(&second - &mean_sq)).max(0.0);
    let mean = q_to_f64(&mean_sq).sqrt();
    if mean <= alpha {
        return 0.0;
    }
    (1.0 - 1.0 / (alpha * alpha) - var / ((mean - alpha) * (mean - alpha))).max(0.0)
}
