use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::gl::counts::fixed_space_counts;
use crate::gl::irreps::{unipotent_marginal, GL_ENUM_MAX_N, GL_ENUM_MAX_Q};
use crate::numeric::{q_ratio, q_render, q_to_f64, Q};
use crate::partition::Partition;

/// `Σ_{i=1}^{n} count(n−i)·q^{−2ri}`, exact.
pub fn gl_l2_sum(n: usize, q: u64, r: usize) -> Result<Q> {
    let counts = fixed_space_counts(n, q)?;
    let qq = BigUint::from(q);
    Ok((1..=n)
        .map(|i| q_ratio(&counts[&(n - i)], &Pow::pow(&qq, (2 * r * i) as u32)))
        .fold(Q::zero(), |a, b| a + b))
}

/// `½·sqrt(Σ_{i=1}^{n} count(n−i)·q^{−2ri})`, an upper bound on TV after `r` steps.
pub fn gl_upper_bound(n: usize, q: u64, r: usize) -> Result<f64> {
    Ok(0.5 * q_to_f64(&gl_l2_sum(n, q, r)?).sqrt())
}

/// `1/(q^{Σλ_i²}·Π_b (1 − q^{−h(b)})²)`, which dominates `π(φ(e) = λ)`.
pub fn unipotent_mass_bound(lambda: &Partition, q: u64) -> Q {
    let qq = BigUint::from(q);
    let mut value = Q::new(
        1.into(),
        Pow::pow(&qq, lambda.sum_of_squares() as u32).into(),
    );
    for h in lambda.hooks() {
        let qh = Pow::pow(&qq, h as u32);
        // 1/(1 − q^{−h})² = (q^h/(q^h − 1))².
        let f = q_ratio(&qh, &(&qh - 1u32));
        value *= &f * &f;
    }
    value
}

/// `(1−1/q)^{−6}·Σ_{m≥c} 1/(q^m − 1)`, summed until terms fall below 1e−17 of the total.
pub fn unipotent_tail_bound(q: u64, c: usize) -> f64 {
    let qf = q as f64;
    let mut sum = 0.0;
    let mut m = c.max(1);
    loop {
        let term = 1.0 / (qf.powi(m as i32) - 1.0);
        sum += term;
        if !term.is_finite() || term <= sum * 1e-17 || term == 0.0 {
            break;
        }
        m += 1;
    }
    sum / (1.0 - 1.0 / qf).powi(6)
}

/// How a [`GlLowerBound`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBoundMethod {
    /// `1 − π(φ(e)_1 ≥ c)` from the exact unipotent marginal.
    ExactMarginal,
    /// `1 − min(1, tail bound)`.
    TailBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct GlLowerBound {
    pub value: f64,
    /// Exact value rendered `p/q` when the marginal was enumerated.
    pub exact: Option<String>,
    pub method: LowerBoundMethod,
}

/// TV lower bound after `n − c` steps, from the event `φ(e)_1 ≥ c`.
pub fn gl_lower_bound(n: usize, q: u64, c: usize) -> Result<GlLowerBound> {
    if n <= GL_ENUM_MAX_N && q <= GL_ENUM_MAX_Q {
        let mass: Q = unipotent_marginal(n, q)?
            .into_iter()
            .filter(|(lam, _)| lam.first_row() >= c)
            .map(|(_, m)| m)
            .fold(Q::zero(), |a, b| a + b);
        let v = Q::one() - mass;
        return Ok(GlLowerBound {
            value: q_to_f64(&v),
            exact: Some(q_render(&v)),
            method: LowerBoundMethod::ExactMarginal,
        });
    }
    Ok(GlLowerBound {
        value: 1.0 - unipotent_tail_bound(q, c).min(1.0),
        exact: None,
        method: LowerBoundMethod::TailBound,
    })
}

/// Exact `unipotent_mass_bound` against the exact marginal mass for each `φ(e)`.
pub fn unipotent_mass_pairs(n: usize, q: u64) -> Result<Vec<(Partition, Q, Q)>> {
    Ok(unipotent_marginal(n, q)?
        .into_iter()
        .map(|(lam, m)| {
            let b = unipotent_mass_bound(&lam, q);
            (lam, m, b)
        })
        .collect())
}
