use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::asymptotics::certified::{weighted_product, Iv};
use crate::error::{Error, Result};
use crate::numeric::{q_int, q_pow, Q};
use crate::partition::{partitions_up_to, Partition};

/// Default working precision in bits for certified enclosures.
pub const DEFAULT_PRECISION: u32 = 128;

fn check_domain(u: &Q, q: &Q) -> Result<()> {
    if *q <= Q::one() {
        return Err(Error::invalid("q must exceed 1"));
    }
    if *u <= Q::zero() || u >= q {
        return Err(Error::invalid("u must satisfy 0 < u < q"));
    }
    Ok(())
}

/// Unnormalized weight `u^{|λ|}/(q^{Σλ_i²}·Π_b (1 − q^{−h(b)})²)`.
pub fn suq_weight(u: &Q, q: &Q, lambda: &Partition) -> Q {
    let x = q.recip();
    let mut w = q_pow(u, lambda.size()) * q_pow(&x, lambda.sum_of_squares());
    for h in lambda.hooks() {
        let f = Q::one() - q_pow(&x, h);
        w /= &f * &f;
    }
    w
}

/// `Z = Π_{k≥1} (1 − u·q^{−k})^k`, the mass of the empty partition.
pub fn suq_normalizer(u: &Q, q: &Q, prec: u32) -> Result<Iv> {
    check_domain(u, q)?;
    Ok(weighted_product(u, &q.recip(), prec))
}

/// Certified enclosure of `S_{u,q}(λ) = Z·weight(λ)`.
pub fn suq_mass(u: &Q, q: &Q, lambda: &Partition) -> Result<(Q, Q)> {
    let z = suq_normalizer(u, q, DEFAULT_PRECISION)?;
    let m = z.mul_q(&suq_weight(u, q, lambda));
    Ok((m.lo_q(), m.hi_q()))
}

/// Masses of `S_{u,q}` on partitions of size at most `M`, with a bound on the rest.
#[derive(Clone, Debug, Serialize)]
pub struct SuqMeasure {
    #[serde(serialize_with = "crate::serde_util::q_str")]
    pub u: Q,
    #[serde(serialize_with = "crate::serde_util::q_str")]
    pub q: Q,
    pub truncation_size: usize,
    #[serde(skip)]
    pub normalizer: Iv,
    #[serde(skip)]
    pub masses: Vec<(Partition, Iv)>,
    /// Upper bound on the mass of partitions larger than `M`.
    #[serde(serialize_with = "crate::serde_util::q_str")]
    pub tail_bound: Q,
}

impl SuqMeasure {
    pub fn new(u: &Q, q: &Q, truncation_size: usize) -> Result<Self> {
        let z = suq_normalizer(u, q, DEFAULT_PRECISION)?;
        let masses: Vec<(Partition, Iv)> = partitions_up_to(truncation_size)
            .into_iter()
            .map(|p| {
                let m = z.mul_q(&suq_weight(u, q, &p));
                (p, m)
            })
            .collect();
        let lower: Q = masses
            .iter()
            .map(|(_, m)| m.lo_q())
            .fold(Q::zero(), |a, b| a + b);
        let mut tail = Q::one() - lower;
        if *q >= q_int(2) {
            let cited = coefficient_tail_bound(u, q, truncation_size);
            if cited < tail {
                tail = cited;
            }
        }
        Ok(SuqMeasure {
            u: u.clone(),
            q: q.clone(),
            truncation_size,
            normalizer: z,
            masses,
            tail_bound: tail,
        })
    }

    pub fn mass(&self, lambda: &Partition) -> Option<&Iv> {
        self.masses
            .iter()
            .find(|(p, _)| p == lambda)
            .map(|(_, m)| m)
    }

    /// `(Σ lower, Σ upper)` over the listed partitions.
    pub fn listed_total(&self) -> (Q, Q) {
        self.masses
            .iter()
            .fold((Q::zero(), Q::zero()), |(lo, hi), (_, m)| {
                (lo + m.lo_q(), hi + m.hi_q())
            })
    }

    /// Mass of each size `0..=M`, as midpoints.
    pub fn size_law_f64(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.truncation_size + 1];
        for (p, m) in &self.masses {
            out[p.size()] += m.mid_f64();
        }
        out
    }
}

/// Rational upper bound on `(1 − 1/q)^{−6}·Σ_{m>M} u^m/(q^m − 1)` for `q ≥ 2`,
/// `u < q`: the first terms are summed in interval arithmetic and the rest is
/// dominated by a geometric series.
pub fn coefficient_tail_bound(u: &Q, q: &Q, m: usize) -> Q {
    let prec = DEFAULT_PRECISION;
    let one = Q::one();
    let ratio = u / q;
    let extra = 200;
    let mut sum = Iv::zero(prec);
    for k in m + 1..=m + extra {
        let term = q_pow(u, k) / (q_pow(q, k) - &one);
        sum = sum.add(&Iv::from_q(&term, prec));
    }
    let l = m + extra;
    // u^k/(q^k − 1) ≤ (u/q)^k/(1 − q^{−(L+1)}) for k > L.
    let rest = q_pow(&ratio, l + 1) / ((&one - &ratio) * (&one - q_pow(&q.recip(), l + 1)));
    let front = q_pow(&(&one - q.recip()), 6).recip();
    let total = sum.add(&Iv::from_q(&rest, prec)).mul_q(&front);
    total.hi_q()
}

/// Limit law `S_{1, q^d}` of the partition at a degree-`d` cuspidal label.
pub fn limit_marginal(q: u64, degree: usize, truncation_size: usize) -> Result<SuqMeasure> {
    if q < 2 || degree == 0 {
        return Err(Error::invalid("limit_marginal needs q ≥ 2 and degree ≥ 1"));
    }
    let qd = Q::from_integer(num_traits::pow(BigInt::from(q), degree));
    SuqMeasure::new(&Q::one(), &qd, truncation_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q_frac;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(suq_weight(&Q::one(), &q_int(2), &p("1")), q_int(2));
        assert_eq!(
            suq_weight(&Q::one(), &q_int(2), &Partition::empty()),
            Q::one()
        );
        // (2): q^{-4}/((1−1/q)(1−1/q²))² at q=2 = (1/16)/(3/8)² = 4/9.
        assert_eq!(suq_weight(&Q::one(), &q_int(2), &p("2")), q_frac(4, 9));
    }

    #[test]
    fn empty_mass_is_normalizer() {
        let (lo, hi) = suq_mass(&q_frac(1, 2), &q_int(3), &Partition::empty()).unwrap();
        let z = suq_normalizer(&q_frac(1, 2), &q_int(3), DEFAULT_PRECISION).unwrap();
        assert_eq!((lo, hi), (z.lo_q(), z.hi_q()));
        assert!(suq_mass(&q_int(3), &q_int(3), &Partition::empty()).is_err());
        assert!(suq_mass(&q_frac(5, 2), &q_int(3), &Partition::empty()).is_ok());
    }

    #[test]
    fn normalization_encloses_one() {
        for (u, q) in [
            (Q::one(), q_int(2)),
            (q_frac(1, 2), q_int(2)),
            (q_frac(9, 10), q_int(3)),
            (q_frac(3, 2), q_int(2)),
        ] {
            let s = SuqMeasure::new(&u, &q, 12).unwrap();
            let (lo, hi) = s.listed_total();
            assert!(lo <= Q::one(), "u={u} q={q}");
            assert!(hi + &s.tail_bound >= Q::one(), "u={u} q={q}");
        }
    }

    #[test]
    fn limit_ratio() {
        let s = limit_marginal(2, 1, 6).unwrap();
        let e = s.mass(&Partition::empty()).unwrap();
        let one = s.mass(&p("1")).unwrap();
        assert!(e.lo > BigInt::zero());
        let r = one.mid_f64() / e.mid_f64();
        assert!((r - 2.0).abs() < 1e-12);
    }
}
