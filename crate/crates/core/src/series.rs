//! Truncated power series in one variable with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{q_pow, q_render, q_to_f64, Q};

/// `c_0 + c_1·u + … + c_M·u^M`, products truncated at order `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Q>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![Q::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, Q::one())
    }

    /// `c·u^k`, or zero when `k` exceeds the order.
    pub fn monomial(order: usize, k: usize, c: Q) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Q>) -> Self {
        coeffs.resize(order + 1, Q::zero());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Q {
        &self.coeffs[k]
    }

    fn check_order(&self, other: &TruncSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::SizeMismatch {
                expected: self.order(),
                actual: other.order(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        let m = self.order();
        let mut out = vec![Q::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=m - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn scale(&self, c: &Q) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; fails when the constant term is zero.
    pub fn reciprocal(&self) -> Result<TruncSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::invalid(
                "reciprocal of a series with zero constant term",
            ));
        }
        let m = self.order();
        let inv0 = c0.recip();
        let mut out = vec![Q::zero(); m + 1];
        out[0] = inv0.clone();
        for k in 1..=m {
            let s = (1..=k).fold(Q::zero(), |acc, j| acc + &self.coeffs[j] * &out[k - j]);
            out[k] = -(s * &inv0);
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn pow(&self, mut e: u64) -> TruncSeries {
        let mut base = self.clone();
        let mut acc = TruncSeries::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `1/(1 − c·u^k)` expanded to the order.
    pub fn geometric(order: usize, k: usize, c: &Q) -> TruncSeries {
        assert!(k > 0, "geometric series needs positive degree");
        let mut s = Self::zero(order);
        let mut term = Q::one();
        for j in (0..=order).step_by(k) {
            s.coeffs[j] = term.clone();
            term *= c;
        }
        s
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => q_render(c),
                1 => format!("{}·u", q_render(c)),
                _ => format!("{}·u^{k}", q_render(c)),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            write!(f, "{} + O(u^{})", terms.join(" + "), self.order() + 1)
        }
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.try_add(rhs).expect("series orders differ")
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.try_mul(rhs).expect("series orders differ")
    }
}

/// `(1/q)_r = Π_{k=1}^{r} (1 − q^{−k})`.
pub fn q_pochhammer(q: &Q, r: usize) -> Q {
    let x = q.recip();
    (1..=r).fold(Q::one(), |acc, k| acc * (Q::one() - q_pow(&x, k)))
}

/// `Σ_{n=0}^{M} u^n/(1/q)_n`.
pub fn euler_lhs(q: &Q, order: usize) -> TruncSeries {
    TruncSeries::from_coeffs(
        order,
        (0..=order).map(|n| q_pochhammer(q, n).recip()).collect(),
    )
}

/// `Π_{m=0}^{K} (1 − u/q^m)^{−1}` truncated at order `M`.
pub fn euler_partial_product(q: &Q, order: usize, k_max: usize) -> TruncSeries {
    let x = q.recip();
    let mut acc = TruncSeries::one(order);
    let mut xm = Q::one();
    for _ in 0..=k_max {
        acc = &acc * &TruncSeries::geometric(order, 1, &xm);
        xm *= &x;
    }
    acc
}

/// Gaussian binomial `[n+K choose n]` in the variable `1/q`, which is the
/// coefficient of `u^n` in `Π_{m=0}^{K} (1 − u/q^m)^{−1}`.
pub fn gaussian_binomial_inv(q: &Q, n: usize, k_max: usize) -> Q {
    let x = q.recip();
    (1..=n).fold(Q::one(), |acc, i| {
        acc * (Q::one() - q_pow(&x, k_max + i)) / (Q::one() - q_pow(&x, i))
    })
}

/// Outcome of comparing both sides of `Σ u^n/(1/q)_n = Π_{m≥0}(1 − u/q^m)^{−1}`.
#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    pub order: usize,
    /// Number of factors `K+1` in the last partial product.
    pub factors: usize,
    /// Largest coefficient change between the last two partial products.
    pub last_increment: f64,
    /// Largest `|lhs − rhs|` coefficient gap at the last partial product.
    pub final_gap: f64,
    /// Every partial product matched the Gaussian binomial closed form exactly.
    pub finite_identity_exact: bool,
    /// Every partial-product coefficient lay at or below the left side.
    pub bounded_by_lhs: bool,
    pub converged: bool,
}

/// Threshold on successive partial-product increments.
pub const EULER_TOLERANCE: f64 = 1e-30;

/// Expands partial products until every coefficient up to order `M` moves by
/// less than `tol` in one step, checking the finite identity at each step.
pub fn euler_check(q: &Q, order: usize, tol: &Q) -> Result<EulerReport> {
    if *q <= Q::one() {
        return Err(Error::invalid("q must exceed 1"));
    }
    let lhs = euler_lhs(q, order);
    let x = q.recip();
    let mut acc = TruncSeries::one(order);
    let mut xm = Q::one();
    let mut exact = true;
    let mut bounded = true;
    let cap = 20_000;
    for k in 0..cap {
        let next = &acc * &TruncSeries::geometric(order, 1, &xm);
        xm *= &x;
        exact &= (0..=order).all(|n| *next.coeff(n) == gaussian_binomial_inv(q, n, k));
        bounded &= (0..=order).all(|n| next.coeff(n) <= lhs.coeff(n));
        let last_inc = (0..=order)
            .map(|n| (next.coeff(n) - acc.coeff(n)).abs())
            .max()
            .unwrap_or_default();
        acc = next;
        if k > 0 && last_inc < *tol {
            let gap = (0..=order)
                .map(|n| (lhs.coeff(n) - acc.coeff(n)).abs())
                .max()
                .unwrap_or_default();
            return Ok(EulerReport {
                order,
                factors: k + 1,
                last_increment: q_to_f64(&last_inc),
                final_gap: q_to_f64(&gap),
                finite_identity_exact: exact,
                bounded_by_lhs: bounded,
                // Once increments fall below tol the remaining gap is at most
                // tol·x/((1 − x)·(x;x)_M) by the q-Pascal recurrence.
                converged: gap <= tol * &x / ((Q::one() - &x) * q_pochhammer(q, order)),
            });
        }
    }
    Err(Error::capacity(
        "formal-series",
        "partial product factors",
        cap,
        cap,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{q_frac, q_int};

    fn s(order: usize, c: &[i64]) -> TruncSeries {
        TruncSeries::from_coeffs(order, c.iter().map(|v| q_int(*v)).collect())
    }

    #[test]
    fn arithmetic_examples() {
        let one_minus_u = s(6, &[1, -1]);
        let r = one_minus_u.reciprocal().unwrap();
        assert_eq!(r, s(6, &[1; 7]));
        assert_eq!(&one_minus_u * &r, TruncSeries::one(6));
        let one_plus_u = s(4, &[1, 1]);
        assert_eq!(one_plus_u.pow(2), s(4, &[1, 2, 1]));
        assert!(s(3, &[0, 1]).reciprocal().is_err());
        assert!(s(3, &[1]).try_add(&s(4, &[1])).is_err());
    }

    #[test]
    fn pochhammer() {
        let two = q_int(2);
        assert_eq!(q_pochhammer(&two, 0), Q::one());
        assert_eq!(q_pochhammer(&two, 2), q_frac(3, 8));
        assert_eq!(q_pochhammer(&two, 3), q_frac(21, 64));
    }

    #[test]
    fn partial_product_matches_gaussian_binomial() {
        for q in [q_int(2), q_int(3), q_frac(5, 2)] {
            for k in 0..6 {
                let p = euler_partial_product(&q, 5, k);
                for n in 0..=5 {
                    assert_eq!(*p.coeff(n), gaussian_binomial_inv(&q, n, k));
                }
            }
        }
    }

    #[test]
    fn euler_identity() {
        let tol = Q::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 30));
        let lhs = euler_lhs(&q_int(2), 4);
        assert_eq!(*lhs.coeff(0), Q::one());
        assert_eq!(*lhs.coeff(1), q_int(2));
        for (q, m) in [(q_int(2), 4), (q_int(3), 5), (q_int(2), 6)] {
            let rep = euler_check(&q, m, &tol).unwrap();
            assert!(
                rep.finite_identity_exact && rep.bounded_by_lhs && rep.converged,
                "{rep:?}"
            );
            assert!(rep.final_gap < 1e-28);
        }
    }
}
